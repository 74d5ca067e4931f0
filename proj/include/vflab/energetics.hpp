#pragma once

#include "vflab/types.hpp"

namespace vflab {

/// Energy budget of a doubled-back loop of transverse extent a: segment term
/// 2*a*xi (redundant filament length) plus distortion term 8*zeta*nu^2/a
/// (bending self-energy).
struct LoopEnergy {
  double segment_term = 0.0;
  double distortion_term = 0.0;
  double total = 0.0;
};

LoopEnergy loop_total_energy(double a, const PhysicalParams& params);

/// Numeric argmin of the loop energy over a (golden section + derivative
/// polish).
double loop_energy_argmin(const PhysicalParams& params);

/// Energy budget of a circular ring of radius R: circumference term
/// 2*pi*R*xi plus bending term pi*zeta*nu^2/R.
struct RingEnergy {
  double segment_term = 0.0;
  double distortion_term = 0.0;
  double total = 0.0;
};

RingEnergy ring_total_energy(double radius, const PhysicalParams& params);

/// Numeric argmin of the ring energy over the radius.
double ring_energy_argmin(const PhysicalParams& params);

/// Relative cost of splitting a fixed bending budget between two loops of
/// size fractions alpha and 1-alpha: 1/alpha + 1/(1-alpha). Minimum 4 at the
/// even split; alpha outside (0, 1) throws DomainError.
double split_penalty(double alpha);

/// Smallest stable transverse scale a0 = 2*nu/c.
double elementary_segment(const PhysicalParams& params);

/// Translation-speed bound (2*nu/a)*beta for a disturbance of extent a at
/// speed fraction beta.
double velocity_bound(double a, double beta, const PhysicalParams& params);

/// Action-scale calibration on the smallest segment: hbar = 2*nu*zeta*a0,
/// with the splinter momentum p(k) = hbar*k and aggregate kinetic energy
/// E(k, m) = hbar*(nu/m)*k^2 for an m-splinter packet.
struct HbarCalibration {
  double a0 = 0.0;
  double hbar = 0.0;
  double momentum(double k) const { return hbar * k; }
  double energy(double k, double m) const;

 private:
  friend HbarCalibration hbar_calibration(const PhysicalParams& params);
  double nu_ = 0.0;
};

HbarCalibration hbar_calibration(const PhysicalParams& params);

}  // namespace vflab
