#include "vflab/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "detail.hpp"
#include "vflab/errors.hpp"
#include "vflab/lia.hpp"
#include "vflab/conservation.hpp"
#include "vflab/minimize.hpp"
#include "vflab/nls.hpp"

namespace vflab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

// Intensity centroid and variance of a field, plain rectangle sums over the
// grid (the profiles handled here decay well inside the window).
void intensity_moments(const ComplexField& field, double* centroid,
                       double* variance) {
  const std::size_t n = field.size();
  double mass = 0.0, first = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = std::norm(field.values[j]);
    mass += rho;
    first += rho * field.grid(j);
  }
  const double mean = first / mass;
  double second = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = field.grid(j) - mean;
    second += std::norm(field.values[j]) * d * d;
  }
  if (centroid != nullptr) *centroid = mean;
  if (variance != nullptr) *variance = second / mass;
}

}  // namespace

void EnsembleParams::validate() const {
  if (m == 0) throw DomainError("bundle size must be at least 1");
  require_positive(kappa_hat, "peak curvature scale");
  if (!std::isfinite(tau)) throw DomainError("torsion must be finite");
}

double aggregate_phase(const EnsembleParams& e, double nu, double x, double t) {
  e.validate();
  require_positive(nu, "nu");
  const double k = static_cast<double>(e.m) * e.tau;
  return k * x - (nu / static_cast<double>(e.m)) * k * k * t;
}

double center_of_mass_coefficient(const EnsembleParams& e, double nu) {
  e.validate();
  require_positive(nu, "nu");
  return nu / static_cast<double>(e.m);
}

DispersionFit fit_dispersion_coefficient(double coefficient, double sigma0,
                                         double domain_length, std::size_t n,
                                         double t_end, std::size_t n_samples) {
  require_positive(coefficient, "dispersion coefficient");
  require_positive(sigma0, "initial width");
  require_positive(domain_length, "domain length");
  require_positive(t_end, "end time");
  if (n_samples < 3) throw DomainError("need at least 3 samples for the fit");

  const double sigma_end = std::sqrt(
      sigma0 * sigma0 +
      std::pow(coefficient * t_end / sigma0, 2.0));
  if (domain_length < 12.0 * sigma_end) {
    throw WindowTooNarrow("domain holds less than 12 standard deviations of "
                          "the final packet; widen it or shorten the run");
  }

  // Centered Gaussian with position variance sigma0^2, evolved mode-exactly.
  std::vector<Complex> values(n);
  const double dx = domain_length / static_cast<double>(n);
  const double x0 = -0.5 * domain_length;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x0 + dx * static_cast<double>(j);
    values[j] = std::exp(-x * x / (4.0 * sigma0 * sigma0));
  }
  ComplexField field(std::move(values), x0, dx, true);

  PhysicalParams evolve_params;
  evolve_params.nu = coefficient;

  std::vector<double> t_sq(n_samples), var(n_samples);
  double t_prev = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = t_end * static_cast<double>(i) /
                     static_cast<double>(n_samples - 1);
    if (i > 0) field = step_linearized(field, t - t_prev, evolve_params);
    t_prev = t;
    double v = 0.0;
    intensity_moments(field, nullptr, &v);
    t_sq[i] = t * t;
    var[i] = v;
  }

  const detail::LineFit line = detail::fit_line(t_sq, var);
  DispersionFit fit;
  fit.sigma0_sq = line.intercept;
  fit.growth_rate = line.slope;
  fit.coefficient = std::sqrt(std::max(line.slope * line.intercept, 0.0));
  return fit;
}

HartreeReport hartree_normalizations(const EnsembleParams& e, double nu,
                                     double domain_length, std::size_t n) {
  e.validate();
  require_positive(nu, "nu");
  if (n < 16) throw DomainError("quadrature grid needs at least 16 samples");

  double length = domain_length;
  if (length == 0.0) {
    length = 40.0 / e.kappa_hat;  // tails below 1e-17 of the peak intensity
  } else {
    require_positive(length, "domain length");
  }

  const double md = static_cast<double>(e.m);
  HartreeReport report;
  report.m = e.m;
  report.splinter_norm_target = 8.0 * e.kappa_hat / md;

  // One scaled factor: amplitude A*sech(kappa_hat*x) with A = 2*kappa_hat/sqrt(m).
  const double amp = 2.0 * e.kappa_hat / std::sqrt(md);
  const double dx = length / static_cast<double>(n);
  double norm2 = 0.0, norm4 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -0.5 * length + dx * (static_cast<double>(j) + 0.5);
    const double y = amp / std::cosh(e.kappa_hat * x);
    norm2 += y * y;
    norm4 += y * y * y * y;
  }
  norm2 *= dx;
  norm4 *= dx;

  report.splinter_norm = norm2;
  report.residual = std::abs(norm2 - report.splinter_norm_target);
  if (report.residual > 1e-9 * report.splinter_norm_target) {
    throw NormalizationUnsatisfiable(
        "window truncates the profile: norm defect " +
        std::to_string(report.residual / report.splinter_norm_target) +
        " relative");
  }

  report.carrier_half_norm = 0.5 * (md - 1.0) * norm2;
  report.carrier_half_norm_limit = 4.0 * e.kappa_hat;
  report.quartic_integral = norm4;
  report.omega0 = nu * md * (md - 1.0) * (md - 2.0) / (32.0 * e.kappa_hat) * norm4;
  return report;
}

CollapseResult collapse_demo(const ComplexField& initial,
                             const PhysicalParams& params, double t_end,
                             double dt, std::size_t sample_every) {
  params.validate();
  require_positive(t_end, "end time");
  require_positive(dt, "time step");
  if (sample_every == 0) throw DomainError("sample stride must be positive");
  if (!initial.periodic) {
    throw NonUniformGrid("collapse tracking needs a periodic field");
  }

  const std::size_t n_steps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(t_end / dt)));
  const double dt_eff = t_end / static_cast<double>(n_steps);

  CollapseResult result;
  ComplexField field = initial;

  auto record = [&](double t) {
    double centroid = 0.0;
    intensity_moments(field, &centroid, nullptr);

    double peak = 0.0;
    double mass2 = 0.0;
    for (const Complex& v : field.values) {
      peak = std::max(peak, std::abs(v));
      mass2 += std::norm(v);
    }
    const double norm_field = std::sqrt(mass2);

    auto distance = [&](double k) {
      double acc = 0.0;
      for (std::size_t j = 0; j < field.size(); ++j) {
        const double model = 2.0 * k / std::cosh(k * (field.grid(j) - centroid));
        const double d = std::abs(field.values[j]) - model;
        acc += d * d;
      }
      return std::sqrt(acc) / norm_field;
    };

    const double k_guess = std::max(0.5 * peak, 1e-6);
    const double k_fit =
        minimize_scalar(distance, 0.05 * k_guess, 20.0 * k_guess, 1e-8);

    result.times.push_back(t);
    result.sech_distance.push_back(distance(k_fit));
    result.kappa_fit.push_back(k_fit);
    result.center_fit.push_back(centroid);
    result.mass.push_back(mass_integral(field, params));
  };

  record(0.0);
  for (std::size_t step = 1; step <= n_steps; ++step) {
    field = nls_step(field, dt_eff, params);
    if (step % sample_every == 0 || step == n_steps) {
      record(dt_eff * static_cast<double>(step));
    }
  }
  return result;
}

}  // namespace vflab
