#pragma once

#include <functional>

namespace vflab {

/// Scalar minimization on (lo, hi): golden-section bracketing down to
/// rel_tol, then a few secant iterations on the centered finite-difference
/// derivative to polish past the sqrt(eps) comparison limit. The function
/// must be unimodal on the interval.
double minimize_scalar(const std::function<double(double)>& f, double lo,
                       double hi, double rel_tol = 1e-10);

}  // namespace vflab
