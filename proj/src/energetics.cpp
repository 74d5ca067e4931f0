#include "vflab/energetics.hpp"

#include <cmath>
#include <numbers>

#include "vflab/errors.hpp"
#include "vflab/minimize.hpp"

namespace vflab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

LoopEnergy loop_total_energy(double a, const PhysicalParams& params) {
  params.validate();
  require_positive(a, "loop extent");
  LoopEnergy e;
  e.segment_term = 2.0 * a * params.xi;
  e.distortion_term = 8.0 * params.zeta * params.nu * params.nu / a;
  e.total = e.segment_term + e.distortion_term;
  return e;
}

double loop_energy_argmin(const PhysicalParams& params) {
  params.validate();
  // Bracket around the balance scale of the two terms, then minimize.
  const double scale = params.nu * std::sqrt(params.zeta / params.xi);
  return minimize_scalar(
      [&](double a) { return loop_total_energy(a, params).total; },
      1e-3 * scale, 1e3 * scale);
}

RingEnergy ring_total_energy(double radius, const PhysicalParams& params) {
  params.validate();
  require_positive(radius, "ring radius");
  RingEnergy e;
  e.segment_term = 2.0 * std::numbers::pi * radius * params.xi;
  e.distortion_term =
      std::numbers::pi * params.zeta * params.nu * params.nu / radius;
  e.total = e.segment_term + e.distortion_term;
  return e;
}

double ring_energy_argmin(const PhysicalParams& params) {
  params.validate();
  const double scale = params.nu * std::sqrt(params.zeta / params.xi);
  return minimize_scalar(
      [&](double r) { return ring_total_energy(r, params).total; },
      1e-3 * scale, 1e3 * scale);
}

double split_penalty(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw DomainError("size fraction must lie strictly inside (0, 1)");
  }
  return 1.0 / alpha + 1.0 / (1.0 - alpha);
}

double elementary_segment(const PhysicalParams& params) {
  params.validate();
  return 2.0 * params.nu / params.c;
}

double velocity_bound(double a, double beta, const PhysicalParams& params) {
  params.validate();
  require_positive(a, "disturbance extent");
  if (!(beta >= 0.0) || !(beta <= 1.0)) {
    throw DomainError("speed fraction must lie in [0, 1]");
  }
  return (2.0 * params.nu / a) * beta;
}

double HbarCalibration::energy(double k, double m) const {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("packet size must be positive and finite");
  }
  return hbar * (nu_ / m) * k * k;
}

HbarCalibration hbar_calibration(const PhysicalParams& params) {
  params.validate();
  HbarCalibration cal;
  cal.a0 = elementary_segment(params);
  cal.hbar = 2.0 * params.nu * params.zeta * cal.a0;
  cal.nu_ = params.nu;
  return cal;
}

}  // namespace vflab
