#pragma once

#include <cstdint>
#include <vector>

#include "vflab/types.hpp"

namespace vflab {

/// Polyline sampling of a filament.
///
/// Orientation is part of the data: the tangent (and with it the vorticity
/// direction) follows increasing node index, so reversing the node order
/// reverses every orientation-dependent quantity (binormal, induced drift).
///
/// `closed` makes the node sequence cyclic. A closed curve with
/// `axial_period > 0` is screw-periodic: index wraparound adds
/// `axis * axial_period`, which represents one period of an infinite curve
/// that repeats under a translation along `axis` (an infinite helix, for
/// example). Plain closed curves keep `axial_period = 0`.
struct DiscreteCurve {
  std::vector<Vec3> nodes;
  bool closed = false;
  Vec3 axis = Vec3::UnitX();
  double axial_period = 0.0;

  std::size_t size() const { return nodes.size(); }
};

/// Discrete Frenet data at every node. `defined[i]` is false where curvature
/// is below the curvature floor; normal, binormal and torsion are zeroed
/// there and must not be used.
struct FrenetData {
  std::vector<double> arclength;  // cumulative chord length, arclength[0] = 0
  std::vector<Vec3> tangent;
  std::vector<Vec3> normal;
  std::vector<Vec3> binormal;
  std::vector<double> kappa;
  std::vector<double> tau;
  std::vector<std::uint8_t> defined;
  double total_length = 0.0;  // includes the wrap segment for closed curves
  bool closed = false;

  std::size_t size() const { return arclength.size(); }
};

/// Tangent, curvature, torsion and frame by second-order finite differences
/// on the chord-length parametrization (centered in the interior and across
/// periodic wraps, one-sided four-point at open endpoints). Torsion comes
/// from the binormal derivative projected on the normal, tau = -n . db/ds.
///
/// Throws DegenerateSegment if two consecutive nodes coincide. Requires at
/// least 4 nodes.
FrenetData compute_frenet(const DiscreteCurve& curve);

/// Redistribute `n_nodes` nodes at equal arc-length spacing along the cubic
/// spline interpolant of the input (natural boundary conditions for open
/// curves, periodic for closed ones, chord-length knots). Endpoints of open
/// curves are preserved. Requires n_nodes >= 4.
DiscreteCurve resample_uniform(const DiscreteCurve& curve, std::size_t n_nodes);

/// Excess length stored in the disturbance of an asymptotically straight open
/// curve: total arc length minus the extent along `axis` between the
/// endpoints. Both endpoint tangents must lie within `tangent_tol` of `axis`
/// (throws NotAsymptoticallyStraight otherwise).
double redundant_length(const DiscreteCurve& curve, const Vec3& axis,
                        double tangent_tol = 1e-3);

/// Same, against the curve's own reference axis.
double redundant_length(const DiscreteCurve& curve);

}  // namespace vflab
