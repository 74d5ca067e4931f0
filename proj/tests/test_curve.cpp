#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "vflab/analytic.hpp"
#include "vflab/curve.hpp"
#include "vflab/errors.hpp"

using namespace vflab;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace {

DiscreteCurve open_helix(double a, double tau, double h, std::size_t n) {
  DiscreteCurve c;
  c.closed = false;
  c.nodes.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = h * static_cast<double>(j);
    c.nodes[j] = Vec3(x, a * std::cos(tau * x), a * std::sin(tau * x));
  }
  return c;
}

DiscreteCurve tilted_circle(double radius, std::size_t n) {
  // Circle in a plane spanned by two fixed non-axis-aligned unit vectors.
  const Vec3 u = Vec3(1.0, 2.0, 2.0).normalized();
  const Vec3 w0 = Vec3(-2.0, 1.0, 0.0).normalized();
  const Vec3 w = (w0 - w0.dot(u) * u).normalized();
  DiscreteCurve c;
  c.closed = true;
  c.axial_period = 0.0;
  c.nodes.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    c.nodes[j] = radius * (std::cos(th) * u + std::sin(th) * w);
  }
  return c;
}

}  // namespace

TEST_CASE("helix curvature and torsion match the closed forms") {
  const double a = 0.3;
  const double tau = 2.0;
  const double kappa_exact = a * tau * tau / (1.0 + a * a * tau * tau);
  const double tau_exact = tau / (1.0 + a * a * tau * tau);

  const DiscreteCurve c = open_helix(a, tau, 0.01, 600);
  const FrenetData f = compute_frenet(c);
  REQUIRE(f.size() == 600);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f.defined[i] == 1);
  }
  for (std::size_t i = 5; i + 5 < f.size(); ++i) {
    CHECK(f.kappa[i] == doctest::Approx(kappa_exact).epsilon(1e-4));
    CHECK(f.tau[i] == doctest::Approx(tau_exact).epsilon(1e-4));
  }
  // One-sided boundary stencils are noisier but stay second order.
  CHECK(f.kappa.front() == doctest::Approx(kappa_exact).epsilon(1e-2));
  CHECK(f.kappa.back() == doctest::Approx(kappa_exact).epsilon(1e-2));
}

TEST_CASE("screw-periodic helix has no seam: frame quantities are uniform") {
  const HelixParams hp{0.1, 1.0};
  const std::size_t n = 256;
  const double span = 2.0 * kTwoPi;  // two full turns
  const DiscreteCurve c =
      helix_curve(hp, 1.0, 0.0, 0.0, span / static_cast<double>(n), n, true);
  REQUIRE(c.closed);
  const FrenetData f = compute_frenet(c);
  double kmin = f.kappa[0], kmax = f.kappa[0];
  double tmin = f.tau[0], tmax = f.tau[0];
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(f.defined[i] == 1);
    kmin = std::min(kmin, f.kappa[i]);
    kmax = std::max(kmax, f.kappa[i]);
    tmin = std::min(tmin, f.tau[i]);
    tmax = std::max(tmax, f.tau[i]);
  }
  CHECK((kmax - kmin) / kmax < 1e-10);
  CHECK((tmax - tmin) / tmax < 1e-10);
}

TEST_CASE("tilted circle: curvature 1/R, torsion zero, closing seam smooth") {
  const double radius = 2.0;
  const DiscreteCurve c = tilted_circle(radius, 512);
  const FrenetData f = compute_frenet(c);
  CHECK(f.total_length == doctest::Approx(kTwoPi * radius).epsilon(1e-4));
  for (std::size_t i = 0; i < f.size(); ++i) {
    REQUIRE(f.defined[i] == 1);
    CHECK(f.kappa[i] == doctest::Approx(1.0 / radius).epsilon(1e-4));
    CHECK(std::abs(f.tau[i]) < 1e-9);
  }
}

TEST_CASE("frenet data is invariant under rigid motions") {
  auto gen = testsupport::make_rng(7);
  const SolitonParams sp{1.1, 0.4};
  const DiscreteCurve c = soliton_curve(sp, 1.0, 0.0, 12.0, 400);
  const FrenetData f = compute_frenet(c);

  const Eigen::Matrix3d rot = testsupport::random_rotation(gen);
  const Vec3 shift(0.7, -2.3, 5.1);
  DiscreteCurve moved = c;
  for (Vec3& r : moved.nodes) r = rot * r + shift;
  moved.axis = rot * c.axis;
  const FrenetData g = compute_frenet(moved);

  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(f.kappa[i] - g.kappa[i]) < 1e-10);
    // The torsion estimate divides by the curvature, so roundoff from the
    // rotated arithmetic is amplified where the curve is nearly straight;
    // compare it only where the frame is well conditioned.
    if (f.kappa[i] > 0.05) {
      CHECK(std::abs(f.tau[i] - g.tau[i]) < 1e-7);
    }
    CHECK(std::abs(f.arclength[i] - g.arclength[i]) < 1e-10);
  }
}

TEST_CASE("orientation reversal keeps curvature and torsion, flips tangent") {
  const SolitonParams sp{0.9, 0.5};
  const DiscreteCurve c = soliton_curve(sp, 1.0, 0.0, 11.0, 257);
  const FrenetData f = compute_frenet(c);

  DiscreteCurve rev = c;
  std::reverse(rev.nodes.begin(), rev.nodes.end());
  const FrenetData g = compute_frenet(rev);

  const std::size_t n = c.nodes.size();
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const std::size_t j = n - 1 - i;
    CHECK(f.kappa[i] == doctest::Approx(g.kappa[j]).epsilon(1e-8));
    CHECK(f.tau[i] == doctest::Approx(g.tau[j]).epsilon(1e-6));
    CHECK((f.tangent[i] + g.tangent[j]).norm() < 1e-10);
  }
}

TEST_CASE("straight segments are flagged undefined with zeroed frame") {
  DiscreteCurve line;
  line.closed = false;
  for (int j = 0; j < 16; ++j) {
    line.nodes.push_back(Vec3(0.25 * j, 1.0, -2.0));
  }
  const FrenetData f = compute_frenet(line);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f.defined[i] == 0);
    CHECK(f.kappa[i] < kCurvatureFloor);
    CHECK(f.normal[i].norm() == 0.0);
    CHECK(f.binormal[i].norm() == 0.0);
    CHECK(f.tau[i] == 0.0);
  }
}

TEST_CASE("coincident nodes raise DegenerateSegment") {
  DiscreteCurve c;
  c.closed = false;
  c.nodes = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0)};
  CHECK_THROWS_AS(compute_frenet(c), DegenerateSegment);
}

TEST_CASE("resample_uniform: square stays a 4-node closed curve") {
  DiscreteCurve square;
  square.closed = true;
  square.axial_period = 0.0;
  square.nodes = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)};
  const DiscreteCurve r4 = resample_uniform(square, 4);
  REQUIRE(r4.nodes.size() == 4);
  CHECK(r4.closed);
  // Equal chord spacing, including the closing chord.
  std::vector<double> chords;
  for (std::size_t i = 0; i < 4; ++i) {
    chords.push_back((r4.nodes[(i + 1) % 4] - r4.nodes[i]).norm());
  }
  for (double c : chords) CHECK(c == doctest::Approx(chords[0]).epsilon(1e-9));
  // First node is the parameter origin of the fitted closed curve.
  CHECK((r4.nodes[0] - square.nodes[0]).norm() < 1e-12);
}

TEST_CASE("resample_uniform: open curve keeps endpoints, equalizes spacing") {
  const DiscreteCurve c = open_helix(0.4, 1.3, 0.11, 100);
  const DiscreteCurve r = resample_uniform(c, 57);
  REQUIRE(r.nodes.size() == 57);
  CHECK(!r.closed);
  CHECK((r.nodes.front() - c.nodes.front()).norm() < 1e-9);
  CHECK((r.nodes.back() - c.nodes.back()).norm() < 1e-9);
  std::vector<double> chords;
  for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) {
    chords.push_back((r.nodes[i + 1] - r.nodes[i]).norm());
  }
  for (double ch : chords) {
    CHECK(ch == doctest::Approx(chords[0]).epsilon(1e-5));
  }
}

TEST_CASE("resample_uniform preserves the screw wrap of a closed helix") {
  const HelixParams hp{0.05, 1.0};
  const std::size_t n = 128;
  const double span = kTwoPi;
  const DiscreteCurve c =
      helix_curve(hp, 1.0, 0.0, 0.0, span / static_cast<double>(n), n, true);
  const DiscreteCurve r = resample_uniform(c, 96);
  REQUIRE(r.nodes.size() == 96);
  CHECK(r.closed);
  CHECK(r.axial_period == doctest::Approx(c.axial_period));
  // Resampled nodes still lie on the helix surface r^2 = a^2.
  for (const Vec3& p : r.nodes) {
    const double rho = std::hypot(p.y(), p.z());
    CHECK(rho == doctest::Approx(hp.a).epsilon(1e-4));
  }
}

TEST_CASE("redundant_length matches twice the transverse amplitude") {
  const SolitonParams sp{0.8, 0.3};
  const DiscreteCurve c = soliton_curve(sp, 1.0, 0.0, 20.0, 4096);
  const double excess = redundant_length(c);
  CHECK(std::abs(excess - 2.0 * sp.amplitude()) < 1e-4);
}

TEST_CASE("redundant_length refuses curves without straight ends") {
  const DiscreteCurve circle = tilted_circle(1.0, 64);
  DiscreteCurve open_arc = circle;
  open_arc.closed = false;
  CHECK_THROWS_AS(redundant_length(open_arc), NotAsymptoticallyStraight);
}

TEST_CASE("curvature estimator is second order in the spacing") {
  const HelixParams hp{0.08, 1.0};
  const double a = hp.a, tau = hp.tau;
  const double kappa_exact = a * tau * tau / (1.0 + a * a * tau * tau);
  auto worst_error = [&](std::size_t n) {
    const DiscreteCurve c =
        helix_curve(hp, 1.0, 0.0, 0.0, kTwoPi / static_cast<double>(n), n, true);
    const FrenetData f = compute_frenet(c);
    double worst = 0.0;
    for (double k : f.kappa) worst = std::max(worst, std::abs(k - kappa_exact));
    return worst;
  };
  const double e1 = worst_error(64);
  const double e2 = worst_error(128);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("resample_uniform rejects degenerate targets") {
  const DiscreteCurve c = open_helix(0.2, 1.0, 0.1, 32);
  CHECK_THROWS_AS(resample_uniform(c, 3), DomainError);
}
