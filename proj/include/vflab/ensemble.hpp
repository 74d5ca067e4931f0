#pragma once

#include <cstddef>
#include <vector>

#include "vflab/field.hpp"
#include "vflab/types.hpp"

namespace vflab {

/// A bundle of m identical filament disturbances treated as one carrier.
struct EnsembleParams {
  std::size_t m = 1;
  double kappa_hat = 1.0;
  double tau = 0.0;

  void validate() const;
};

/// Total phase of the m-fold bundle at center position x and time t:
/// k*x - (nu/m)*k^2*t with aggregate wavenumber k = m*tau.
double aggregate_phase(const EnsembleParams& e, double nu, double x, double t);

/// Dispersion coefficient of the bundle's center-of-mass motion: nu/m.
double center_of_mass_coefficient(const EnsembleParams& e, double nu);

/// Fit of the dispersion coefficient from a Gaussian packet evolved under
/// the linearized dynamics with coefficient D: the variance grows as
/// sigma^2(t) = sigma0^2 + (D/sigma0)^2 t^2, so D = sqrt(beta*c) from the
/// least-squares line sigma^2 = c + beta*t^2.
struct DispersionFit {
  double coefficient = 0.0;   // fitted D
  double sigma0_sq = 0.0;     // fitted intercept
  double growth_rate = 0.0;   // fitted beta
};

DispersionFit fit_dispersion_coefficient(double coefficient, double sigma0,
                                         double domain_length, std::size_t n,
                                         double t_end, std::size_t n_samples);

/// Product-state normalization bookkeeping for the m-body bundle with a sech
/// trial profile: each factor is scaled to integral |phi|^2 dx = 8*kappa_hat/m,
/// the carrier wave is phi scaled by sqrt(m-1), and the effective frequency
/// shift is omega0 = nu * m(m-1)(m-2)/(32*kappa_hat) * integral |phi|^4 dx.
struct HartreeReport {
  std::size_t m = 0;
  double splinter_norm_target = 0.0;  // 8*kappa_hat/m
  double splinter_norm = 0.0;         // quadrature of the scaled profile
  double residual = 0.0;              // |splinter_norm - target|
  double carrier_half_norm = 0.0;     // (1/2) integral |carrier|^2 dx
  double carrier_half_norm_limit = 0.0;  // 4*kappa_hat (m -> infinity)
  double quartic_integral = 0.0;      // integral |phi|^4 dx of one factor
  double omega0 = 0.0;
};

HartreeReport hartree_normalizations(const EnsembleParams& e, double nu,
                                     double domain_length = 0.0,
                                     std::size_t n = 4096);

/// Distance of an evolving field from the nearest sech disturbance profile,
/// tracked along a split-step trajectory. The profile family
/// 2*k*sech(k*(l - l0)) is fitted per snapshot (l0 = intensity centroid,
/// k by scalar minimization of the relative L2 distance).
struct CollapseResult {
  std::vector<double> times;
  std::vector<double> sech_distance;  // relative L2 distance to best fit
  std::vector<double> kappa_fit;
  std::vector<double> center_fit;
  std::vector<double> mass;
};

CollapseResult collapse_demo(const ComplexField& initial,
                             const PhysicalParams& params, double t_end,
                             double dt, std::size_t sample_every);

}  // namespace vflab
