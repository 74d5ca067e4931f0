#pragma once

#include <Eigen/Dense>

namespace vflab {

using Vec3 = Eigen::Vector3d;

/// Curvature magnitudes below this are treated as zero: normal, binormal and
/// torsion are undefined there.
inline constexpr double kCurvatureFloor = 1e-12;

/// Field intensities |phi|^2 below this are treated as vacuum: phase-derived
/// quantities are undefined there.
inline constexpr double kRhoFloor = 1e-20;

/// Physical constants of the medium. All strictly positive.
///   nu    - self-induction coefficient (circulation/4pi times the log factor)
///   zeta  - linear mass density of the undisturbed filament
///   xi    - energy per unit length of filament (line tension)
///   c     - transverse perturbation speed scale used for the smallest-helix
///           calibration a0 = 2 nu / c
struct PhysicalParams {
  double nu = 1.0;
  double zeta = 1.0;
  double xi = 1.0;
  double c = 10.0;

  void validate() const;
};

}  // namespace vflab
