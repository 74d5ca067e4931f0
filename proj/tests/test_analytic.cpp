#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"
#include "vflab/analytic.hpp"
#include "vflab/curve.hpp"
#include "vflab/errors.hpp"

using namespace vflab;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST_CASE("helix parameter validation enforces the small-pitch regime") {
  CHECK_THROWS_AS((HelixParams{0.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((HelixParams{0.1, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((HelixParams{0.3, 1.0}.validate()), DomainError);  // a*tau = 0.3
  CHECK_NOTHROW((HelixParams{0.05, 1.0}.validate()));
  CHECK((HelixParams{0.02, 1.0}.outside_asymptotic_regime()));
  CHECK(!(HelixParams{0.005, 1.0}.outside_asymptotic_regime()));
}

TEST_CASE("helix nodes agree with the scalar transverse evaluation") {
  const HelixParams hp{0.01, 1.5};
  const double nu = 0.7;
  const double t = 0.9;
  const double dx = 0.05;
  const DiscreteCurve c = helix_curve(hp, nu, t, -1.0, dx, 64, false);
  for (std::size_t j = 0; j < c.nodes.size(); ++j) {
    const double x = -1.0 + dx * static_cast<double>(j);
    CHECK(c.nodes[j].x() == doctest::Approx(x).epsilon(1e-14));
    const Complex w = helix_transverse(hp, nu, t, x);
    CHECK(c.nodes[j].y() == doctest::Approx(w.real()).epsilon(1e-12));
    CHECK(c.nodes[j].z() == doctest::Approx(w.imag()).epsilon(1e-12));
  }
}

TEST_CASE("helix transverse wave rotates at angular rate nu*tau^2") {
  const HelixParams hp{0.01, 2.0};
  const double nu = 1.3;
  const double omega = nu * hp.tau * hp.tau;
  const double x = 0.37;
  const Complex w0 = helix_transverse(hp, nu, 0.0, x);
  const double dt = 0.21;
  const Complex w1 = helix_transverse(hp, nu, dt, x);
  const Complex rotation = w1 / w0;
  CHECK(std::abs(rotation) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::arg(rotation) == doctest::Approx(-omega * dt).epsilon(1e-12));
}

TEST_CASE("screw-periodic helix requires an integer number of turns") {
  const HelixParams hp{0.01, 1.0};
  // span = 1.5 turns -> not closable as a screw-periodic curve
  const double span = 1.5 * kTwoPi;
  CHECK_THROWS_AS(helix_curve(hp, 1.0, 0.0, 0.0, span / 128.0, 128, true),
                  DomainError);
  CHECK_NOTHROW(helix_curve(hp, 1.0, 0.0, 0.0, kTwoPi / 128.0, 128, true));
}

TEST_CASE("soliton curve: axial coordinate and transverse envelope") {
  const SolitonParams sp{1.2, 0.4};
  const double a = sp.amplitude();
  CHECK(a == doctest::Approx(2.0 * sp.kappa_hat /
                             (sp.kappa_hat * sp.kappa_hat + sp.tau * sp.tau)));
  const double nu = 1.0;
  const double t = 0.6;
  const std::size_t n = 801;
  const DiscreteCurve c = soliton_curve(sp, nu, t, 14.0, n);
  REQUIRE(c.nodes.size() == n);

  const double center = 2.0 * nu * sp.tau * t;
  const double l_lo = center - 14.0 / sp.kappa_hat;
  const double l_hi = center + 14.0 / sp.kappa_hat;
  const double dl = (l_hi - l_lo) / static_cast<double>(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    const double l = l_lo + dl * static_cast<double>(j);
    const double eta = sp.kappa_hat * (l - center);
    // x(l) = l - a*tanh(eta); transverse magnitude a*sech(eta)
    CHECK(c.nodes[j].x() ==
          doctest::Approx(l - a * std::tanh(eta)).epsilon(1e-12));
    const double rho = std::hypot(c.nodes[j].y(), c.nodes[j].z());
    CHECK(rho == doctest::Approx(a / std::cosh(eta)).scale(1.0).epsilon(1e-10));
  }
}

TEST_CASE("soliton curve discrete frenet recovers 2*kappa_hat and tau") {
  const SolitonParams sp{1.0, 0.5};
  const DiscreteCurve c = soliton_curve(sp, 1.0, 0.0, 15.0, 4097);
  const FrenetData f = compute_frenet(c);
  double kappa_peak = 0.0;
  for (double k : f.kappa) kappa_peak = std::max(kappa_peak, k);
  CHECK(kappa_peak == doctest::Approx(2.0 * sp.kappa_hat).epsilon(1e-4));
  // Torsion is uniform through the core of the disturbance.
  const std::size_t mid = f.size() / 2;
  for (std::size_t i = mid - 200; i <= mid + 200; ++i) {
    CHECK(f.tau[i] == doctest::Approx(sp.tau).epsilon(1e-3));
  }
}

TEST_CASE("soliton window and node-count guards") {
  const SolitonParams sp{1.0, 0.2};
  CHECK_THROWS_AS(soliton_curve(sp, 1.0, 0.0, 8.0, 200), WindowTooNarrow);
  CHECK_THROWS_AS(soliton_curve(sp, 1.0, 0.0, 12.0, 3), DomainError);
}

TEST_CASE("one-parameter family at fixed amplitude lies on a circle locus") {
  // For a = 2*kh/(kh^2 + tau^2): (kh - 1/a)^2 + tau^2 = 1/a^2 identically.
  for (double kh : {0.5, 1.0, 1.7}) {
    for (double tau : {0.0, 0.3, 0.9, 2.0}) {
      const SolitonParams sp{kh, tau};
      const double a = sp.amplitude();
      const double lhs = (kh - 1.0 / a) * (kh - 1.0 / a) + tau * tau;
      CHECK(lhs == doctest::Approx(1.0 / (a * a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("soliton field matches the closed form on the grid") {
  const SolitonParams sp{1.1, 0.5};
  const double nu = 0.8;
  const double t = 0.45;
  const std::size_t n = 256;
  const double x0 = -20.0;
  const double dx = 40.0 / static_cast<double>(n);
  const ComplexField field = soliton_field(sp, nu, t, x0, dx, n);
  REQUIRE(field.size() == n);
  CHECK(field.periodic);
  for (std::size_t j = 0; j < n; ++j) {
    const double l = x0 + dx * static_cast<double>(j);
    const double eta = sp.kappa_hat * (l - 2.0 * nu * sp.tau * t);
    const double mag = 2.0 * sp.kappa_hat / std::cosh(eta);
    const double phase =
        sp.tau * l +
        nu * (sp.kappa_hat * sp.kappa_hat - sp.tau * sp.tau) * t;
    const Complex expect = mag * Complex(std::cos(phase), std::sin(phase));
    CHECK(std::abs(field.values[j] - expect) < 1e-12);
  }
}

TEST_CASE("packet closed form: sinc envelope on a rotating carrier") {
  const double a = 0.02, tau0 = 1.0, dtau = 0.1, nu = 1.0;
  // At t = 0, x = 0 the envelope is exactly the amplitude.
  CHECK(std::abs(packet_value(a, tau0, dtau, nu, 0.0, 0.0) - Complex(a, 0.0)) <
        1e-15);
  // First envelope zero at x = pi/dtau.
  const double x_zero = std::numbers::pi / dtau;
  CHECK(std::abs(packet_value(a, tau0, dtau, nu, 0.0, x_zero)) < 1e-15);
  // The envelope translates at twice the carrier phase speed.
  const double t = 3.7;
  for (double x : {-11.0, 0.4, 5.9}) {
    const double shifted = x - 2.0 * nu * tau0 * t;
    CHECK(std::abs(packet_value(a, tau0, dtau, nu, t, x)) ==
          doctest::Approx(std::abs(packet_value(a, tau0, dtau, nu, 0.0, shifted)))
              .epsilon(1e-12));
  }
}

TEST_CASE("wave_packet grid samples equal the scalar closed form") {
  const double a = 0.01, tau0 = 1.0, dtau = 0.1, nu = 1.0, t = 1.5;
  const std::size_t n = 128;
  const double x0 = -40.0;
  const double dx = 80.0 / static_cast<double>(n);
  const ComplexField f = wave_packet(a, tau0, dtau, nu, t, x0, dx, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x0 + dx * static_cast<double>(j);
    CHECK(std::abs(f.values[j] - packet_value(a, tau0, dtau, nu, t, x)) <
          1e-14);
  }
}

TEST_CASE("largest transport speed at fixed amplitude is 2*nu/a") {
  CHECK(soliton_max_speed(0.5, 1.0) == doctest::Approx(4.0));
  CHECK(soliton_max_speed(2.0, 3.0) == doctest::Approx(3.0));
  // The family speed 2*nu*tau on the locus never exceeds it.
  const double a = 0.8, nu = 1.0;
  for (double tau : {0.1, 0.5, 1.0, 1.24}) {
    // kappa_hat solving a = 2*kh/(kh^2+tau^2), larger root
    const double disc = 1.0 / (a * a) - tau * tau;
    if (disc < 0.0) continue;
    const double kh = 1.0 / a + std::sqrt(disc);
    const SolitonParams sp{kh, tau};
    CHECK(sp.amplitude() == doctest::Approx(a).epsilon(1e-12));
    CHECK(2.0 * nu * tau <= soliton_max_speed(a, nu) + 1e-12);
  }
}
