#include "vflab/lia.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "detail.hpp"
#include "vflab/errors.hpp"

namespace vflab {

namespace {

// u_i = nu * e x (d2r/ds2); projecting d2 onto the plane normal to e changes
// nothing under the cross product, so the frame never needs to be built.
void velocity_into(const DiscreteCurve& curve, const PhysicalParams& params,
                   const StepOptions& opts, std::vector<double>& s,
                   std::vector<Vec3>& d1, std::vector<Vec3>& d2,
                   std::vector<Vec3>& u, double* min_segment) {
  Vec3 shift;
  const double total = detail::chord_arclength(curve, s, shift);
  detail::chord_derivatives(curve, s, total, shift, d1, d2);

  const std::size_t n = curve.nodes.size();
  u.resize(n);
  double min_seg = s[1] - s[0];
  for (std::size_t i = 2; i < n; ++i) {
    min_seg = std::min(min_seg, s[i] - s[i - 1]);
  }
  if (curve.closed) {
    min_seg = std::min(min_seg, total - s[n - 1]);
  }
  if (min_segment != nullptr) *min_segment = min_seg;

  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 e = d1[i].normalized();
    Vec3 vel = params.nu * e.cross(d2[i]);
    if (vel.norm() < params.nu * kCurvatureFloor) vel = Vec3::Zero();
    u[i] = vel;
  }

  if (!curve.closed && opts.clamp_buffer > 0.0) {
    const double hi = s[n - 1] - opts.clamp_buffer;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] < opts.clamp_buffer || s[i] > hi) u[i] = Vec3::Zero();
    }
  }
}

}  // namespace

std::vector<Vec3> lia_velocity(const DiscreteCurve& curve,
                               const PhysicalParams& params,
                               const StepOptions& opts) {
  params.validate();
  std::vector<double> s;
  std::vector<Vec3> d1, d2, u;
  velocity_into(curve, params, opts, s, d1, d2, u, nullptr);
  return u;
}

LiaState step_rk4(const LiaState& state, double dt, const PhysicalParams& params,
                  const StepOptions& opts) {
  params.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw DomainError("time step must be positive and finite");
  }

  const std::size_t n = state.curve.nodes.size();
  std::vector<double> s;
  std::vector<Vec3> d1, d2, k1, k2, k3, k4;
  double min_seg = 0.0;

  velocity_into(state.curve, params, opts, s, d1, d2, k1, &min_seg);

  const double dt_max = opts.stability_factor * min_seg * min_seg / params.nu;
  if (dt > dt_max) {
    throw StepTooLarge("dt = " + std::to_string(dt) +
                       " exceeds the stability guard " + std::to_string(dt_max));
  }

  DiscreteCurve work = state.curve;
  auto advance = [&](const std::vector<Vec3>& k, double factor) {
    for (std::size_t i = 0; i < n; ++i) {
      work.nodes[i] = state.curve.nodes[i] + factor * k[i];
    }
  };

  advance(k1, 0.5 * dt);
  velocity_into(work, params, opts, s, d1, d2, k2, nullptr);
  advance(k2, 0.5 * dt);
  velocity_into(work, params, opts, s, d1, d2, k3, nullptr);
  advance(k3, dt);
  velocity_into(work, params, opts, s, d1, d2, k4, nullptr);

  LiaState next;
  next.time = state.time + dt;
  next.curve = state.curve;
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    next.curve.nodes[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return next;
}

ComplexField step_linearized(const ComplexField& field, double dt,
                             const PhysicalParams& params) {
  params.validate();
  if (!field.periodic) {
    throw NonUniformGrid("linearized step needs a periodic field");
  }
  const std::size_t n = field.size();
  std::vector<Complex> hat;
  fft_forward(field.values, hat);
  const std::vector<double> k = fft_wavenumbers(n, field.length());
  for (std::size_t m = 0; m < n; ++m) {
    const double phase = -params.nu * k[m] * k[m] * dt;
    hat[m] *= Complex(std::cos(phase), std::sin(phase));
  }
  std::vector<Complex> out;
  fft_inverse(hat, out);
  return ComplexField(std::move(out), field.x0, field.dx, true);
}

}  // namespace vflab
