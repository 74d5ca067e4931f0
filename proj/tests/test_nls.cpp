#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "vflab/analytic.hpp"
#include "vflab/conservation.hpp"
#include "vflab/curve.hpp"
#include "vflab/errors.hpp"
#include "vflab/nls.hpp"

using namespace vflab;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace {

ComplexField evolve(ComplexField f, double dt, std::size_t steps,
                    const PhysicalParams& params) {
  for (std::size_t k = 0; k < steps; ++k) f = nls_step(f, dt, params);
  return f;
}

double max_field_distance(const ComplexField& a, const ComplexField& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
  }
  return worst;
}

}  // namespace

TEST_CASE("curvature-phase field of a screw helix") {
  const HelixParams hp{0.08, 1.0};
  const std::size_t n = 128;
  const double dx = 2.0 * kTwoPi / static_cast<double>(n);  // two turns
  const DiscreteCurve c = helix_curve(hp, 1.0, 0.0, 0.0, dx, n, true);
  const FrenetData f = compute_frenet(c);
  const ComplexField field = hasimoto_map(f, 0.0, 0.0);

  REQUIRE(field.size() == n);
  CHECK(field.periodic);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(field.values[i]) ==
          doctest::Approx(f.kappa[i]).epsilon(1e-14));
  }
  // Phase increments accumulate the trapezoid of the torsion.
  for (std::size_t i = 1; i < n; ++i) {
    const double h = f.arclength[i] - f.arclength[i - 1];
    const double expected = 0.5 * (f.tau[i - 1] + f.tau[i]) * h;
    const double got =
        std::arg(field.values[i] * std::conj(field.values[i - 1]));
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("rotation rate enters the field as a rigid phase factor") {
  const HelixParams hp{0.08, 1.0};
  const std::size_t n = 64;
  const double dx = kTwoPi / static_cast<double>(n);
  const FrenetData f =
      compute_frenet(helix_curve(hp, 1.0, 0.0, 0.0, dx, n, true));
  const double omega = 1.3;
  const double t = 0.7;
  const ComplexField base = hasimoto_map(f, 0.0, 0.0);
  const ComplexField shifted = hasimoto_map(f, omega, t);
  const Complex factor(std::cos(omega * t), -std::sin(omega * t));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(shifted.values[i] - factor * base.values[i]) < 1e-14);
  }
}

TEST_CASE("non-uniform sampling is rejected") {
  const HelixParams hp{0.08, 1.0};
  const std::size_t n = 64;
  const double dx = kTwoPi / static_cast<double>(n);
  DiscreteCurve c = helix_curve(hp, 1.0, 0.0, 0.0, dx, n, true);
  CHECK_NOTHROW(hasimoto_map(compute_frenet(c), 0.0, 0.0));
  c.nodes[30].x() += 0.01 * dx;
  CHECK_THROWS_AS(hasimoto_map(compute_frenet(c), 0.0, 0.0), NonUniformGrid);

  // Power-of-two node counts only.
  const DiscreteCurve c100 =
      helix_curve(hp, 1.0, 0.0, 0.0, kTwoPi / 100.0, 100, true);
  CHECK_THROWS_AS(hasimoto_map(compute_frenet(c100), 0.0, 0.0),
                  NonUniformGrid);
}

TEST_CASE("a flat gap strictly between curved regions has no unique phase") {
  const std::size_t n = 8;
  FrenetData f;
  f.closed = false;
  f.total_length = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    f.arclength.push_back(static_cast<double>(i));
    const bool curved = i < 2 || i >= 5;
    f.kappa.push_back(curved ? 0.5 : 0.0);
    f.tau.push_back(0.0);
    f.defined.push_back(curved ? 1 : 0);
    f.tangent.push_back(Vec3::UnitX());
    f.normal.push_back(curved ? Vec3(Vec3::UnitY()) : Vec3(Vec3::Zero()));
    f.binormal.push_back(curved ? Vec3(Vec3::UnitZ()) : Vec3(Vec3::Zero()));
  }
  CHECK_THROWS_AS(hasimoto_map(f, 0.0, 0.0), UndefinedFrame);
}

TEST_CASE("curve -> field -> curve round trip") {
  const SolitonParams sp{0.9, 0.35};
  const std::size_t n = 4096;
  const DiscreteCurve c = soliton_curve(sp, 1.0, 0.0, 12.0, n);
  const FrenetData f = compute_frenet(c);
  REQUIRE(f.defined.front() == 1);  // ends still carry ~1e-5 curvature
  const ComplexField field = hasimoto_map(f, 0.0, 0.0);
  const DiscreteCurve rebuilt =
      reconstruct_curve(field, c.nodes.front(), f.tangent.front(),
                        f.normal.front());
  REQUIRE(rebuilt.size() == n);
  const double worst = testsupport::max_node_distance(rebuilt.nodes, c.nodes);
  CHECK(worst < 1e-3);
}

TEST_CASE("reconstruction rejects a non-orthonormal start frame") {
  const SolitonParams sp{1.0, 0.0};
  const ComplexField field =
      soliton_field(sp, 1.0, 0.0, -20.0, 40.0 / 256.0, 256);
  CHECK_THROWS_AS(
      reconstruct_curve(field, Vec3::Zero(), Vec3::UnitX(), Vec3::UnitX()),
      DomainError);
  CHECK_THROWS_AS(
      reconstruct_curve(field, Vec3::Zero(), 2.0 * Vec3::UnitX(),
                        Vec3::UnitY()),
      DomainError);
}

TEST_CASE("split step conserves the norm to machine precision") {
  const SolitonParams sp{1.0, 0.4};
  const double length = 10.0 * kTwoPi;  // carrier fits: tau*L = 8*pi
  const std::size_t n = 512;
  ComplexField f = soliton_field(sp, 1.0, 0.0, -0.5 * length,
                                 length / static_cast<double>(n), n);
  const PhysicalParams params;
  const double mass0 = mass_integral(f, params);
  f = evolve(f, 0.01, 50, params);
  CHECK(mass_integral(f, params) == doctest::Approx(mass0).epsilon(1e-14));
}

TEST_CASE("straight-filament disturbance is a fixed point up to phase") {
  const SolitonParams sp{1.0, 0.0};
  const double length = 40.0;
  const std::size_t n = 256;
  const double dx = length / static_cast<double>(n);
  const PhysicalParams params;
  ComplexField f = soliton_field(sp, params.nu, 0.0, -0.5 * length, dx, n);
  const double t_end = 0.5;
  const double dt = 1e-3;
  f = evolve(f, dt, 500, params);
  const ComplexField exact =
      soliton_field(sp, params.nu, t_end, -0.5 * length, dx, n);
  CHECK(max_field_distance(f, exact) < 2e-5);
}

TEST_CASE("split-step error falls 4x under step halving") {
  const SolitonParams sp{1.0, 0.0};
  const double length = 40.0;
  const std::size_t n = 256;
  const double dx = length / static_cast<double>(n);
  const PhysicalParams params;
  const ComplexField f0 = soliton_field(sp, params.nu, 0.0, -0.5 * length,
                                        dx, n);
  const ComplexField exact =
      soliton_field(sp, params.nu, 1.0, -0.5 * length, dx, n);
  const double e1 = max_field_distance(evolve(f0, 0.04, 25, params), exact);
  const double e2 = max_field_distance(evolve(f0, 0.02, 50, params), exact);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("intensity and velocity fields of a traveling disturbance") {
  const SolitonParams sp{1.0, 0.4};
  const double length = 10.0 * kTwoPi;
  const std::size_t n = 1024;
  const double dx = length / static_cast<double>(n);
  PhysicalParams params;
  params.nu = 1.3;
  const ComplexField f =
      soliton_field(sp, params.nu, 0.0, -0.5 * length, dx, n);
  const HydroFields h = hydro_fields(f, params);
  for (std::size_t j = 0; j < n; ++j) {
    const double l = f.grid(j);
    if (std::abs(l) > 5.0) continue;  // stay where rho is well conditioned
    REQUIRE(h.defined[j] == 1);
    CHECK(h.rho[j] ==
          doctest::Approx(4.0 * std::pow(1.0 / std::cosh(l), 2)).epsilon(1e-12));
    CHECK(h.v[j] == doctest::Approx(2.0 * params.nu * sp.tau).epsilon(1e-8));
    CHECK(h.w[j] ==
          doctest::Approx(2.0 * params.nu * std::tanh(l)).scale(1.0).epsilon(1e-6));
  }
}

TEST_CASE("vacuum samples are flagged undefined") {
  const std::size_t n = 64;
  std::vector<Complex> values(n, Complex(0.0, 0.0));
  for (std::size_t j = 24; j < 40; ++j) {
    const double x = 0.25 * (static_cast<double>(j) - 32.0);
    values[j] = Complex(1.0 / std::cosh(x), 0.0);
  }
  const ComplexField f(values, 0.0, 0.25, true);
  const HydroFields h = hydro_fields(f, PhysicalParams{});
  CHECK(h.defined[0] == 0);
  CHECK(h.v[0] == 0.0);
  CHECK(h.w[0] == 0.0);
  CHECK(h.defined[32] == 1);
  // The non-periodic variant is refused outright.
  const ComplexField open_field(values, 0.0, 0.25, false);
  CHECK_THROWS_AS(hydro_fields(open_field, PhysicalParams{}), NonUniformGrid);
}
