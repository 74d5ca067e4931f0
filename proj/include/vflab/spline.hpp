#pragma once

#include <cstddef>
#include <vector>

#include "vflab/types.hpp"

namespace vflab {

/// Interpolating cubic spline on strictly increasing knots.
/// Natural boundary conditions (zero second derivative at both ends) or
/// periodic closure; periodic splines take y[0] as the value at both t[0]
/// and t[0] + period.
class CubicSpline {
 public:
  CubicSpline() = default;

  /// Natural spline through (t[i], y[i]).
  static CubicSpline natural(std::vector<double> t, std::vector<double> y);

  /// Periodic spline: knots t[0..K-1], wrap interval ends at t[0] + period,
  /// value there equals y[0].
  static CubicSpline periodic(std::vector<double> t, std::vector<double> y,
                              double period);

  double eval(double x) const;
  double deriv(double x) const;

  double t_min() const { return t_.front(); }
  double t_max() const { return periodic_ ? t_.front() + period_ : t_.back(); }

 private:
  std::size_t locate(double& x) const;

  std::vector<double> t_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at knots (+ wrap entry)
  bool periodic_ = false;
  double period_ = 0.0;
};

/// Space curve spline: three coordinate splines on shared chord-length knots,
/// plus arc-length bookkeeping (per-interval Gauss quadrature) and inversion
/// of the arc-length function.
///
/// Screw-periodic input (closed with axial_period > 0) is handled by
/// splitting off the linear ramp along the axis so the remainder is periodic.
class CurveSpline {
 public:
  /// Chord-length parametrized interpolant of the nodes. `closed` appends the
  /// wrap interval back to the first node (shifted by axis*axial_period when
  /// screw-periodic).
  CurveSpline(const std::vector<Vec3>& nodes, bool closed,
              const Vec3& axis = Vec3::UnitX(), double axial_period = 0.0);

  Vec3 eval(double t) const;
  Vec3 deriv(double t) const;

  /// Total arc length of the interpolant (one period for closed input).
  double total_arclength() const { return arc_.back(); }

  /// Parameter t at which arc length from t_min equals s.
  double param_at_arclength(double s) const;

  double t_min() const { return knots_.front(); }
  double t_max() const { return knots_.back(); }

 private:
  double speed(double t) const;
  double arc_on_interval(std::size_t i, double t_hi) const;

  CubicSpline sx_, sy_, sz_;
  std::vector<double> knots_;  // includes the wrap knot for closed input
  std::vector<double> arc_;    // cumulative arc length at knots_
  Vec3 ramp_ = Vec3::Zero();   // d(position)/d(knot) linear part (screw wrap)
};

}  // namespace vflab
