#pragma once

#include <span>
#include <vector>

#include "vflab/curve.hpp"
#include "vflab/field.hpp"
#include "vflab/types.hpp"

namespace vflab {

/// Disturbance self-energy eps = (zeta*nu^2/2) * integral of |Phi|^2 dl
/// (rectangle rule on periodic grids).
double self_energy(const ComplexField& field, const PhysicalParams& params);

/// Same from curve geometry: (zeta*nu^2/2) * integral of kappa^2 dl
/// (trapezoid on the discrete Frenet data).
double self_energy(const DiscreteCurve& curve, const PhysicalParams& params);

/// Large-wavenumber limit of the effective inertia of a disturbance of
/// transverse amplitude a: m_eps = zeta * a.
double asymptotic_mass(double a, const PhysicalParams& params);

/// Kinetic energy of a disturbance of effective mass m_eps translating at
/// 2*nu*tau: E_t = 2 * m_eps * nu^2 * tau^2.
double translational_energy(double m_eps, double tau,
                            const PhysicalParams& params);

/// Integral invariants of the field dynamics. `mass` is reported in energy
/// units (it equals the self-energy), `momentum` likewise carries the
/// zeta*nu^2/2 weight.
double mass_integral(const ComplexField& field, const PhysicalParams& params);
double momentum_integral(const ComplexField& field,
                         const PhysicalParams& params);
/// integral of rho*((v^2 + w^2 - nu^2 rho)/2 + U) dl, evaluated spectrally
/// via the identity rho*(v^2 + w^2) = 4*nu^2*|Phi_l|^2 (no division by rho,
/// stable through vacuum regions).
double energy_integral(const ComplexField& field, const PhysicalParams& params,
                       std::span<const double> potential = {});

struct DriftTolerances {
  double mass = 1e-10;
  double momentum = 1e-6;
  double energy = 1e-5;
};

struct ConservationReport {
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> momentum;
  std::vector<double> energy;
  double drift_mass = 0.0;      // max |Q(t) - Q(0)| / max(|Q(0)|, 1e-12)
  double drift_momentum = 0.0;
  double drift_energy = 0.0;
  bool pass_mass = false;
  bool pass_momentum = false;
  bool pass_energy = false;
};

/// Evaluate the invariants on every snapshot of a trajectory and flag the
/// relative drifts against the tolerances. Throws EmptyTrajectory when no
/// snapshots are given.
ConservationReport track_conservation(const std::vector<double>& times,
                                      const std::vector<ComplexField>& fields,
                                      const PhysicalParams& params,
                                      std::span<const double> potential = {},
                                      const DriftTolerances& tols = {});

}  // namespace vflab
