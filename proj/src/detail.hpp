#pragma once

#include <vector>

#include "vflab/curve.hpp"
#include "vflab/types.hpp"

namespace vflab::detail {

/// Finite-difference weights on an arbitrary stencil (Fornberg's recursion).
/// x0 is the evaluation point, x the stencil coordinates (size n). Weights
/// for derivative orders 0..m are written to w with layout
/// w[i * (m + 1) + k] = weight of sample i in the order-k derivative.
void fd_weights(double x0, const double* x, int n, int m, double* w);

/// Cumulative chord-length parameter along the nodes. Throws
/// DegenerateSegment when consecutive nodes (including the closing segment of
/// a closed curve) are closer than 1e-14. Fills `shift` with the translation
/// applied when index wraparound passes the seam of a closed curve (zero for
/// plain loops and open curves) and returns the total length.
double chord_arclength(const DiscreteCurve& curve, std::vector<double>& s,
                       Vec3& shift);

/// First and second position derivatives with respect to the chord-length
/// parameter at every node: centered three-point stencils in the interior and
/// across the seam of closed curves, one-sided four-point stencils at open
/// endpoints.
void chord_derivatives(const DiscreteCurve& curve,
                       const std::vector<double>& s, double total,
                       const Vec3& shift, std::vector<Vec3>& d1,
                       std::vector<Vec3>& d2);

/// Least-squares line y = intercept + slope * x through the samples.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x,
                        const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double nd = static_cast<double>(n);
  const double det = nd * sxx - sx * sx;
  LineFit fit;
  fit.slope = (nd * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / nd;
  return fit;
}

}  // namespace vflab::detail
