#include "vflab/minimize.hpp"

#include <cmath>

#include "vflab/errors.hpp"

namespace vflab {

double minimize_scalar(const std::function<double(double)>& f, double lo,
                       double hi, double rel_tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("minimization interval is empty or not finite");
  }
  if (!(rel_tol > 0.0)) throw DomainError("tolerance must be positive");

  // Golden-section search. Function comparisons cannot localize a smooth
  // minimum better than about sqrt(machine eps) relative, so stop there and
  // hand over to the derivative stage.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  const double comparison_limit = 4.0 * std::sqrt(2.2e-16);
  for (int it = 0; it < 200; ++it) {
    const double scale = std::abs(a) + std::abs(b) + 1e-300;
    if (b - a <= std::max(rel_tol, comparison_limit) * scale) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);

  // Secant iteration on the centered finite-difference derivative: near the
  // minimum g(x) = f'(x) crosses zero linearly, so its root is resolvable far
  // below the comparison limit.
  const double fd_step = std::cbrt(2.2e-16);
  auto deriv = [&](double t) {
    const double h = fd_step * (std::abs(t) + 1.0);
    return (f(t + h) - f(t - h)) / (2.0 * h);
  };
  double x0 = x;
  double x1 = x * (1.0 + 64.0 * rel_tol) + (x == 0.0 ? 64.0 * rel_tol : 0.0);
  double g0 = deriv(x0);
  double g1 = deriv(x1);
  for (int it = 0; it < 40; ++it) {
    if (g1 == g0) break;
    double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
    if (!std::isfinite(x2)) break;
    if (x2 < lo) x2 = 0.5 * (x1 + lo);
    if (x2 > hi) x2 = 0.5 * (x1 + hi);
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = deriv(x1);
    if (std::abs(x1 - x0) <= rel_tol * (std::abs(x1) + 1e-300)) break;
  }
  if (x1 >= lo && x1 <= hi && std::isfinite(x1)) x = x1;
  return x;
}

}  // namespace vflab
