#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "vflab/analytic.hpp"
#include "vflab/curve.hpp"
#include "vflab/errors.hpp"
#include "vflab/lia.hpp"

using namespace vflab;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST_CASE("straight filaments carry exactly zero velocity") {
  DiscreteCurve line;
  line.closed = false;
  for (int j = 0; j < 12; ++j) line.nodes.push_back(Vec3(0.5 * j, 0.3, -1.0));
  const PhysicalParams params;
  const std::vector<Vec3> u = lia_velocity(line, params);
  for (const Vec3& v : u) CHECK(v.norm() == 0.0);
}

TEST_CASE("velocity is nu*kappa along the binormal") {
  const HelixParams hp{0.1, 1.0};
  const std::size_t n = 256;
  const DiscreteCurve c =
      helix_curve(hp, 1.0, 0.0, 0.0, kTwoPi / static_cast<double>(n), n, true);
  PhysicalParams params;
  params.nu = 1.7;
  const std::vector<Vec3> u = lia_velocity(c, params);
  const FrenetData f = compute_frenet(c);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(f.defined[i] == 1);
    const Vec3 expected = params.nu * f.kappa[i] * f.binormal[i];
    CHECK((u[i] - expected).norm() < 1e-12);
  }
}

TEST_CASE("one RK4 step reproduces the analytic helix motion") {
  const HelixParams hp{0.01, 1.0};
  const std::size_t n = 512;
  const double dx = 2.0 * kTwoPi / static_cast<double>(n);
  const double nu = 1.0;
  const DiscreteCurve c0 = helix_curve(hp, nu, 0.0, 0.0, dx, n, true);
  const double dt = 1e-4;
  const LiaState next = step_rk4({c0, 0.0}, dt, PhysicalParams{});
  CHECK(next.time == doctest::Approx(dt));
  const DiscreteCurve exact = helix_curve(hp, nu, dt, 0.0, dx, n, true);
  CHECK(testsupport::max_node_distance(next.curve.nodes, exact.nodes) < 1e-7);
}

TEST_CASE("the stability guard rejects oversized steps") {
  const HelixParams hp{0.01, 1.0};
  const std::size_t n = 512;
  const double dx = 2.0 * kTwoPi / static_cast<double>(n);
  const DiscreteCurve c0 = helix_curve(hp, 1.0, 0.0, 0.0, dx, n, true);
  CHECK_THROWS_AS((step_rk4({c0, 0.0}, 1.0, PhysicalParams{})), StepTooLarge);
}

TEST_CASE("clamp buffer pins the straight ends of an open filament") {
  const SolitonParams sp{1.0, 0.4};
  const DiscreteCurve c = soliton_curve(sp, 1.0, 0.0, 18.0, 512);
  StepOptions opts;
  opts.clamp_buffer = 3.0;
  const std::vector<Vec3> u = lia_velocity(c, PhysicalParams{}, opts);
  CHECK(u.front().norm() == 0.0);
  CHECK(u.back().norm() == 0.0);
  CHECK(u[u.size() / 2].norm() > 0.1);  // the core still moves
}

TEST_CASE("RK4 time error shrinks 16x under step halving") {
  // Coarse grid on purpose: the stability ceiling scales with the node
  // spacing squared, and the time error must sit far above the correlated
  // roundoff floor of long step sequences for the ratio to be clean.
  const HelixParams hp{0.05, 2.0};
  const std::size_t n = 16;
  const double span = kTwoPi / hp.tau;  // one turn
  const double dx = span / static_cast<double>(n);
  const DiscreteCurve c0 = helix_curve(hp, 1.0, 0.0, 0.0, dx, n, true);
  const PhysicalParams params;
  StepOptions opts;

  auto evolve = [&](double dt, double t_end) {
    LiaState s{c0, 0.0};
    const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
    for (std::size_t k = 0; k < steps; ++k) s = step_rk4(s, dt, params, opts);
    return s.curve.nodes;
  };

  const double t_end = 2.0;
  const double dt1 = 8e-3;
  const auto ref = evolve(dt1 / 8.0, t_end);
  const double e1 = testsupport::rms_node_distance(evolve(dt1, t_end), ref);
  const double e2 = testsupport::rms_node_distance(evolve(dt1 / 2.0, t_end), ref);
  const double ratio = e1 / e2;
  CHECK(ratio > 13.0);
  CHECK(ratio < 19.0);
}

TEST_CASE("linearized propagation advances each mode by exp(-i nu k^2 dt)") {
  const std::size_t n = 64;
  const double length = 8.0;
  const double dx = length / static_cast<double>(n);
  const double k = 2.0 * kTwoPi / length;  // mode index 2
  std::vector<Complex> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = dx * static_cast<double>(j);
    values[j] = Complex(std::cos(k * x), std::sin(k * x));
  }
  const ComplexField f0(values, 0.0, dx, true);
  PhysicalParams params;
  params.nu = 1.4;
  const double dt = 0.37;
  const ComplexField f1 = step_linearized(f0, dt, params);
  const double phase = -params.nu * k * k * dt;
  const Complex factor(std::cos(phase), std::sin(phase));
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(std::abs(f1.values[j] - factor * f0.values[j]) < 1e-12);
  }
}

TEST_CASE("linearized propagation is unitary") {
  auto gen = testsupport::make_rng(11);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t n = 128;
  std::vector<Complex> values(n);
  for (Complex& v : values) v = Complex(normal(gen), normal(gen));
  const ComplexField f0(values, -3.0, 0.125, true);
  double norm0 = 0.0;
  for (const Complex& v : f0.values) norm0 += std::norm(v);
  const ComplexField f1 = step_linearized(f0, 5.0, PhysicalParams{});
  double norm1 = 0.0;
  for (const Complex& v : f1.values) norm1 += std::norm(v);
  CHECK(norm1 == doctest::Approx(norm0).epsilon(1e-13));
}

TEST_CASE("resampling inside a trajectory keeps the helix on its surface") {
  const HelixParams hp{0.02, 1.0};
  const std::size_t n = 128;
  const double dx = kTwoPi / static_cast<double>(n);
  const DiscreteCurve c0 = helix_curve(hp, 1.0, 0.0, 0.0, dx, n, true);
  LiaState s{c0, 0.0};
  const double dt = 5e-4;
  for (int step = 1; step <= 64; ++step) {
    s = step_rk4(s, dt, PhysicalParams{});
    if (step % 16 == 0) s.curve = resample_uniform(s.curve, n);
  }
  for (const Vec3& p : s.curve.nodes) {
    CHECK(std::hypot(p.y(), p.z()) == doctest::Approx(hp.a).epsilon(1e-3));
  }
}
