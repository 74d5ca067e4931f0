#pragma once

#include <vector>

#include "vflab/curve.hpp"
#include "vflab/field.hpp"
#include "vflab/types.hpp"

namespace vflab {

/// Filament state under the local self-induction motion.
struct LiaState {
  DiscreteCurve curve;
  double time = 0.0;
};

struct StepOptions {
  /// dt must satisfy dt <= stability_factor * (min segment length)^2 / nu.
  double stability_factor = 0.25;
  /// Open curves only: nodes within this arc length of either end keep zero
  /// velocity. Use on filaments whose ends are straight; 0 disables.
  double clamp_buffer = 0.0;
};

/// Local self-induction velocity u = nu * kappa * (e x n) at every node,
/// evaluated with the same differences as compute_frenet. Nodes with
/// curvature below the curvature floor get exactly zero velocity.
std::vector<Vec3> lia_velocity(const DiscreteCurve& curve,
                               const PhysicalParams& params,
                               const StepOptions& opts = {});

/// One classical Runge-Kutta 4 step of the node motion. The velocity field
/// (and with it the Frenet data) is re-evaluated at every stage. Throws
/// StepTooLarge when dt violates the stability guard for the entry state.
LiaState step_rk4(const LiaState& state, double dt,
                  const PhysicalParams& params, const StepOptions& opts = {});

/// Exact propagation of the linearized transverse dynamics
/// d(phi)/dt = i * nu * d^2(phi)/dx^2 on a periodic grid: each Fourier mode
/// k is multiplied by exp(-i * nu * k^2 * dt). Unitary by construction.
ComplexField step_linearized(const ComplexField& field, double dt,
                             const PhysicalParams& params);

}  // namespace vflab
