#include "vflab/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "vflab/errors.hpp"

namespace vflab {

namespace {

void require_periodic(const ComplexField& field, const char* what) {
  if (!field.periodic) {
    throw NonUniformGrid(std::string(what) + " needs a periodic field");
  }
}

}  // namespace

double self_energy(const ComplexField& field, const PhysicalParams& params) {
  params.validate();
  const std::size_t n = field.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += std::norm(field.values[j]);
  if (!field.periodic && n > 1) {
    sum -= 0.5 * (std::norm(field.values[0]) + std::norm(field.values[n - 1]));
  }
  return 0.5 * params.zeta * params.nu * params.nu * sum * field.dx;
}

double self_energy(const DiscreteCurve& curve, const PhysicalParams& params) {
  params.validate();
  const FrenetData f = compute_frenet(curve);
  const std::size_t n = f.size();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = f.arclength[i + 1] - f.arclength[i];
    sum += 0.5 * (f.kappa[i] * f.kappa[i] + f.kappa[i + 1] * f.kappa[i + 1]) * h;
  }
  if (f.closed) {
    const double h = f.total_length - f.arclength[n - 1];
    sum += 0.5 * (f.kappa[n - 1] * f.kappa[n - 1] + f.kappa[0] * f.kappa[0]) * h;
  }
  return 0.5 * params.zeta * params.nu * params.nu * sum;
}

double asymptotic_mass(double a, const PhysicalParams& params) {
  params.validate();
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("transverse amplitude must be positive and finite");
  }
  return params.zeta * a;
}

double translational_energy(double m_eps, double tau,
                            const PhysicalParams& params) {
  params.validate();
  if (!(m_eps >= 0.0) || !std::isfinite(m_eps)) {
    throw DomainError("effective mass must be nonnegative and finite");
  }
  return 2.0 * m_eps * params.nu * params.nu * tau * tau;
}

double mass_integral(const ComplexField& field, const PhysicalParams& params) {
  return self_energy(field, params);
}

double momentum_integral(const ComplexField& field,
                         const PhysicalParams& params) {
  params.validate();
  require_periodic(field, "momentum integral");
  const std::vector<Complex> dphi = spectral_derivative(field);
  const std::size_t n = field.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += std::imag(std::conj(field.values[j]) * dphi[j]);
  }
  return 0.5 * params.zeta * params.nu * params.nu * sum * field.dx;
}

double energy_integral(const ComplexField& field, const PhysicalParams& params,
                       std::span<const double> potential) {
  params.validate();
  require_periodic(field, "energy integral");
  const std::size_t n = field.size();
  if (!potential.empty() && potential.size() != n) {
    throw DomainError("potential has " + std::to_string(potential.size()) +
                      " samples, field has " + std::to_string(n));
  }
  const double nu2 = params.nu * params.nu;
  const std::vector<Complex> dphi = spectral_derivative(field);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = std::norm(field.values[j]);
    sum += 2.0 * nu2 * std::norm(dphi[j]) - 0.5 * nu2 * rho * rho;
    if (!potential.empty()) sum += rho * potential[j];
  }
  return sum * field.dx;
}

ConservationReport track_conservation(const std::vector<double>& times,
                                      const std::vector<ComplexField>& fields,
                                      const PhysicalParams& params,
                                      std::span<const double> potential,
                                      const DriftTolerances& tols) {
  if (times.empty() || fields.empty()) {
    throw EmptyTrajectory("conservation tracking needs at least one snapshot");
  }
  if (times.size() != fields.size()) {
    throw DomainError("times and snapshots disagree: " +
                      std::to_string(times.size()) + " vs " +
                      std::to_string(fields.size()));
  }

  ConservationReport report;
  report.times = times;
  const std::size_t m = fields.size();
  report.mass.resize(m);
  report.momentum.resize(m);
  report.energy.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    report.mass[i] = mass_integral(fields[i], params);
    report.momentum[i] = momentum_integral(fields[i], params);
    report.energy[i] = energy_integral(fields[i], params, potential);
  }

  auto drift = [](const std::vector<double>& q) {
    const double scale = std::max(std::abs(q[0]), 1e-12);
    double worst = 0.0;
    for (double v : q) worst = std::max(worst, std::abs(v - q[0]));
    return worst / scale;
  };
  report.drift_mass = drift(report.mass);
  report.drift_momentum = drift(report.momentum);
  report.drift_energy = drift(report.energy);
  report.pass_mass = report.drift_mass <= tols.mass;
  report.pass_momentum = report.drift_momentum <= tols.momentum;
  report.pass_energy = report.drift_energy <= tols.energy;
  return report;
}

}  // namespace vflab
