#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support.hpp"
#include "vflab/analytic.hpp"
#include "vflab/conservation.hpp"
#include "vflab/curve.hpp"
#include "vflab/errors.hpp"

using namespace vflab;
constexpr double kPi = std::numbers::pi;

namespace {

ComplexField centered_soliton_field(const SolitonParams& sp, double nu,
                                    double length, std::size_t n) {
  return soliton_field(sp, nu, 0.0, -0.5 * length,
                       length / static_cast<double>(n), n);
}

}  // namespace

TEST_CASE("disturbance self-energy from the field") {
  PhysicalParams params;
  params.nu = 1.5;
  params.zeta = 2.0;
  const SolitonParams sp{1.0, 0.25};
  const ComplexField f = centered_soliton_field(sp, params.nu, 16.0 * kPi, 1024);
  const double expected = 4.0 * params.zeta * params.nu * params.nu * sp.kappa_hat;
  CHECK(self_energy(f, params) == doctest::Approx(expected).epsilon(1e-6));
  CHECK(mass_integral(f, params) == self_energy(f, params));
}

TEST_CASE("disturbance self-energy from the curve") {
  PhysicalParams params;
  const SolitonParams sp{0.8, 0.3};
  const DiscreteCurve c = soliton_curve(sp, params.nu, 0.0, 12.0, 4096);
  const double expected = 4.0 * params.zeta * params.nu * params.nu * sp.kappa_hat;
  CHECK(self_energy(c, params) == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("large-wavenumber inertia and translational energy") {
  PhysicalParams params;
  params.zeta = 3.0;
  params.nu = 2.0;
  CHECK(asymptotic_mass(0.7, params) == doctest::Approx(2.1).epsilon(1e-15));
  const double m_eps = 0.5;
  const double tau = 1.25;
  CHECK(translational_energy(m_eps, tau, params) ==
        doctest::Approx(2.0 * m_eps * 4.0 * tau * tau).epsilon(1e-15));
}

TEST_CASE("momentum of a traveling disturbance") {
  PhysicalParams params;
  params.nu = 1.5;
  params.zeta = 2.0;
  const SolitonParams sp{0.8, 0.25};
  const ComplexField f = centered_soliton_field(sp, params.nu, 16.0 * kPi, 2048);
  const double expected = 4.0 * params.zeta * params.nu * params.nu *
                          sp.kappa_hat * sp.tau;  // = 3.6
  CHECK(momentum_integral(f, params) ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("free energy integral of the disturbance family") {
  const PhysicalParams params;  // nu = 1
  const SolitonParams sp{1.0, 0.25};
  const ComplexField f = centered_soliton_field(sp, params.nu, 16.0 * kPi, 2048);
  CHECK(energy_integral(f, params) ==
        doctest::Approx(-13.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("constant potential adds potential times carried intensity") {
  const PhysicalParams params;
  const SolitonParams sp{1.0, 0.25};
  const ComplexField f = centered_soliton_field(sp, params.nu, 16.0 * kPi, 2048);
  const double c0 = 0.37;
  const std::vector<double> potential(f.size(), c0);
  const double gain =
      energy_integral(f, params, potential) - energy_integral(f, params);
  CHECK(gain == doctest::Approx(8.0 * sp.kappa_hat * c0).epsilon(1e-10));
}

TEST_CASE("conservation tracking over identical snapshots reports zero drift") {
  const PhysicalParams params;
  const SolitonParams sp{1.0, 0.0};
  const ComplexField f = centered_soliton_field(sp, params.nu, 16.0 * kPi, 512);
  const std::vector<double> times{0.0, 1.0, 2.0};
  const std::vector<ComplexField> fields{f, f, f};
  const ConservationReport report =
      track_conservation(times, fields, params);
  CHECK(report.drift_mass == 0.0);
  CHECK(report.drift_momentum == 0.0);  // finite even though momentum ~ 0
  CHECK(report.drift_energy == 0.0);
  CHECK(report.pass_mass);
  CHECK(report.pass_momentum);
  CHECK(report.pass_energy);
  REQUIRE(report.mass.size() == 3);
  CHECK(report.mass[0] == doctest::Approx(self_energy(f, params)));
}

TEST_CASE("conservation tracking input validation") {
  const PhysicalParams params;
  CHECK_THROWS_AS((track_conservation({}, {}, params)), EmptyTrajectory);
  const SolitonParams sp{1.0, 0.0};
  const ComplexField f = centered_soliton_field(sp, params.nu, 16.0 * kPi, 512);
  CHECK_THROWS_AS((track_conservation({0.0, 1.0}, {f}, params)), DomainError);
}
