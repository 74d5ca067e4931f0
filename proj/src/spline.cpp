#include "vflab/spline.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "vflab/errors.hpp"

namespace vflab {

namespace {

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr double kGaussX[5] = {0.0, -0.5384693101056831, 0.5384693101056831,
                               -0.9061798459386640, 0.9061798459386640};
constexpr double kGaussW[5] = {0.5688888888888889, 0.4786286704993665,
                               0.4786286704993665, 0.2369268850561891,
                               0.2369268850561891};

// Thomas solve of a tridiagonal system; diagonals a (sub), b (main), c (sup).
std::vector<double> solve_tridiag(std::vector<double> a, std::vector<double> b,
                                  std::vector<double> c,
                                  std::vector<double> d) {
  const std::size_t n = b.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
  }
  return x;
}

// Cyclic tridiagonal solve via the Sherman-Morrison correction.
// Row i couples x[i-1], x[i], x[i+1] cyclically with sub a[i], main b[i],
// sup c[i].
std::vector<double> solve_cyclic_tridiag(const std::vector<double>& a,
                                         std::vector<double> b,
                                         const std::vector<double>& c,
                                         const std::vector<double>& d) {
  const std::size_t n = b.size();
  const double alpha = a[0];     // couples row 0 to x[n-1]
  const double beta = c[n - 1];  // couples row n-1 to x[0]
  const double gamma = -b[0];
  std::vector<double> bb = b;
  bb[0] = b[0] - gamma;
  bb[n - 1] = b[n - 1] - alpha * beta / gamma;
  std::vector<double> sub(a.begin(), a.end()), sup(c.begin(), c.end());
  sub[0] = 0.0;
  sup[n - 1] = 0.0;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = beta;
  std::vector<double> x = solve_tridiag(sub, bb, sup, d);
  std::vector<double> z = solve_tridiag(sub, bb, sup, u);
  const double fact = (x[0] + alpha * x[n - 1] / gamma) /
                      (1.0 + z[0] + alpha * z[n - 1] / gamma);
  for (std::size_t i = 0; i < n; ++i) x[i] -= fact * z[i];
  return x;
}

}  // namespace

CubicSpline CubicSpline::natural(std::vector<double> t,
                                 std::vector<double> y) {
  const std::size_t n = t.size();
  if (n < 3 || y.size() != n) {
    throw DomainError("spline needs at least 3 matching knots");
  }
  CubicSpline s;
  s.t_ = std::move(t);
  s.y_ = std::move(y);
  s.m_.assign(n, 0.0);
  if (n > 2) {
    const std::size_t k = n - 2;
    std::vector<double> a(k), b(k), c(k), d(k);
    for (std::size_t i = 0; i < k; ++i) {
      const double hm = s.t_[i + 1] - s.t_[i];
      const double hp = s.t_[i + 2] - s.t_[i + 1];
      a[i] = hm / 6.0;
      b[i] = (hm + hp) / 3.0;
      c[i] = hp / 6.0;
      d[i] = (s.y_[i + 2] - s.y_[i + 1]) / hp - (s.y_[i + 1] - s.y_[i]) / hm;
    }
    a[0] = 0.0;
    c[k - 1] = 0.0;
    std::vector<double> m = solve_tridiag(a, b, c, d);
    for (std::size_t i = 0; i < k; ++i) s.m_[i + 1] = m[i];
  }
  return s;
}

CubicSpline CubicSpline::periodic(std::vector<double> t,
                                  std::vector<double> y, double period) {
  const std::size_t n = t.size();
  if (n < 3 || y.size() != n) {
    throw DomainError("spline needs at least 3 matching knots");
  }
  if (!(period > t.back() - t.front())) {
    throw DomainError("periodic spline period must exceed the knot span");
  }
  CubicSpline s;
  s.t_ = std::move(t);
  s.y_ = std::move(y);
  s.periodic_ = true;
  s.period_ = period;
  auto h = [&](std::size_t i) {
    return i + 1 < n ? s.t_[i + 1] - s.t_[i] : s.t_[0] + period - s.t_[n - 1];
  };
  auto yv = [&](std::size_t i) { return s.y_[i % n]; };
  std::vector<double> a(n), b(n), c(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hm = h((i + n - 1) % n);
    const double hp = h(i);
    a[i] = hm / 6.0;
    b[i] = (hm + hp) / 3.0;
    c[i] = hp / 6.0;
    d[i] = (yv(i + 1) - yv(i)) / hp - (yv(i) - yv(i + n - 1)) / hm;
  }
  std::vector<double> m = solve_cyclic_tridiag(a, b, c, d);
  s.m_ = std::move(m);
  s.m_.push_back(s.m_[0]);
  return s;
}

std::size_t CubicSpline::locate(double& x) const {
  const std::size_t n = t_.size();
  if (periodic_) {
    const double t0 = t_.front();
    x = t0 + std::fmod(x - t0, period_);
    if (x < t0) x += period_;
    auto it = std::upper_bound(t_.begin(), t_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - t_.begin());
    return i == 0 ? 0 : i - 1;  // interval n-1 is the wrap interval
  }
  auto it = std::upper_bound(t_.begin(), t_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - t_.begin());
  if (i == 0) return 0;
  if (i >= n) return n - 2;
  return i - 1;
}

double CubicSpline::eval(double x) const {
  const std::size_t n = t_.size();
  const std::size_t i = locate(x);
  const double t_lo = t_[i];
  const bool wrap = periodic_ && i == n - 1;
  const double t_hi = wrap ? t_.front() + period_ : t_[i + 1];
  const double y_lo = y_[i];
  const double y_hi = wrap ? y_.front() : y_[i + 1];
  const double m_lo = m_[i];
  const double m_hi = m_[i + 1 < m_.size() ? i + 1 : 0];
  const double hh = t_hi - t_lo;
  const double A = (t_hi - x) / hh;
  const double B = (x - t_lo) / hh;
  return A * y_lo + B * y_hi +
         ((A * A * A - A) * m_lo + (B * B * B - B) * m_hi) * hh * hh / 6.0;
}

double CubicSpline::deriv(double x) const {
  const std::size_t n = t_.size();
  const std::size_t i = locate(x);
  const double t_lo = t_[i];
  const bool wrap = periodic_ && i == n - 1;
  const double t_hi = wrap ? t_.front() + period_ : t_[i + 1];
  const double y_lo = y_[i];
  const double y_hi = wrap ? y_.front() : y_[i + 1];
  const double m_lo = m_[i];
  const double m_hi = m_[i + 1 < m_.size() ? i + 1 : 0];
  const double hh = t_hi - t_lo;
  const double A = (t_hi - x) / hh;
  const double B = (x - t_lo) / hh;
  return (y_hi - y_lo) / hh - (3.0 * A * A - 1.0) * hh * m_lo / 6.0 +
         (3.0 * B * B - 1.0) * hh * m_hi / 6.0;
}

CurveSpline::CurveSpline(const std::vector<Vec3>& nodes, bool closed,
                         const Vec3& axis, double axial_period) {
  const std::size_t n = nodes.size();
  if (n < 3) throw DomainError("curve spline needs at least 3 nodes");
  const Vec3 offset =
      closed && axial_period > 0.0 ? Vec3(axis.normalized() * axial_period)
                                   : Vec3(Vec3::Zero());
  std::vector<double> knots(n);
  knots[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double ch = (nodes[i] - nodes[i - 1]).norm();
    if (ch < 1e-14) throw DegenerateSegment("coincident nodes in spline input");
    knots[i] = knots[i - 1] + ch;
  }
  double total_param = knots[n - 1];
  if (closed) {
    const double ch = (nodes[0] + offset - nodes[n - 1]).norm();
    if (ch < 1e-14) throw DegenerateSegment("coincident nodes in spline input");
    total_param += ch;
  }

  ramp_ = closed && axial_period > 0.0 ? Vec3(offset / total_param)
                                       : Vec3(Vec3::Zero());
  std::vector<double> qx(n), qy(n), qz(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 q = nodes[i] - ramp_ * knots[i];
    qx[i] = q.x();
    qy[i] = q.y();
    qz[i] = q.z();
  }
  if (closed) {
    sx_ = CubicSpline::periodic(knots, qx, total_param);
    sy_ = CubicSpline::periodic(knots, qy, total_param);
    sz_ = CubicSpline::periodic(knots, qz, total_param);
  } else {
    sx_ = CubicSpline::natural(knots, qx);
    sy_ = CubicSpline::natural(knots, qy);
    sz_ = CubicSpline::natural(knots, qz);
  }

  knots_ = std::move(knots);
  if (closed) knots_.push_back(total_param);
  arc_.assign(knots_.size(), 0.0);
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    arc_[i] = arc_[i - 1] + arc_on_interval(i - 1, knots_[i]);
  }
}

Vec3 CurveSpline::eval(double t) const {
  return Vec3(sx_.eval(t), sy_.eval(t), sz_.eval(t)) + ramp_ * t;
}

Vec3 CurveSpline::deriv(double t) const {
  return Vec3(sx_.deriv(t), sy_.deriv(t), sz_.deriv(t)) + ramp_;
}

double CurveSpline::speed(double t) const { return deriv(t).norm(); }

double CurveSpline::arc_on_interval(std::size_t i, double t_hi) const {
  const double a = knots_[i];
  const double half = 0.5 * (t_hi - a);
  const double mid = 0.5 * (t_hi + a);
  double acc = 0.0;
  for (int g = 0; g < 5; ++g) {
    acc += kGaussW[g] * speed(mid + half * kGaussX[g]);
  }
  return acc * half;
}

double CurveSpline::param_at_arclength(double s) const {
  const double total = arc_.back();
  s = std::clamp(s, 0.0, total);
  auto it = std::upper_bound(arc_.begin(), arc_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - arc_.begin());
  i = i == 0 ? 0 : i - 1;
  if (i >= knots_.size() - 1) i = knots_.size() - 2;
  double lo = knots_[i], hi = knots_[i + 1];
  const double rem = s - arc_[i];
  double t = lo + (hi - lo) * rem / std::max(arc_[i + 1] - arc_[i], 1e-300);
  for (int iter = 0; iter < 30; ++iter) {
    const double f = arc_on_interval(i, t) - rem;
    if (f > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    const double dt = -f / std::max(speed(t), 1e-300);
    double next = t + dt;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) < 1e-14 * (1.0 + std::abs(t))) {
      t = next;
      break;
    }
    t = next;
  }
  return t;
}

}  // namespace vflab
