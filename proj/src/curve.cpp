#include "vflab/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "detail.hpp"
#include "vflab/errors.hpp"
#include "vflab/spline.hpp"

namespace vflab {

namespace detail {

void fd_weights(double x0, const double* x, int n, int m, double* w) {
  const int stride = m + 1;
  std::fill(w, w + n * stride, 0.0);
  w[0] = 1.0;
  double c1 = 1.0;
  double c4 = x[0] - x0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          w[i * stride + k] =
              c1 * (k * w[(i - 1) * stride + k - 1] - c5 * w[(i - 1) * stride + k]) / c2;
        }
        w[i * stride] = -c1 * c5 * w[(i - 1) * stride] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        w[j * stride + k] = (c4 * w[j * stride + k] - k * w[j * stride + k - 1]) / c3;
      }
      w[j * stride] = c4 * w[j * stride] / c3;
    }
    c1 = c2;
  }
}

double chord_arclength(const DiscreteCurve& curve, std::vector<double>& s,
                       Vec3& shift) {
  const auto& r = curve.nodes;
  const std::size_t n = r.size();
  if (n < 4) throw DomainError("curve needs at least 4 nodes");

  shift = Vec3::Zero();
  if (curve.closed && curve.axial_period != 0.0) {
    const double axis_norm = curve.axis.norm();
    if (axis_norm < 1e-14) {
      throw DomainError("screw-periodic curve has a zero axis");
    }
    shift = (curve.axis / axis_norm) * curve.axial_period;
  }

  s.resize(n);
  s[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double seg = (r[i] - r[i - 1]).norm();
    if (seg < 1e-14) {
      throw DegenerateSegment("nodes " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " are closer than 1e-14");
    }
    s[i] = s[i - 1] + seg;
  }

  double total = s[n - 1];
  if (curve.closed) {
    const double seg = (r[0] + shift - r[n - 1]).norm();
    if (seg < 1e-14) {
      throw DegenerateSegment("closing segment is shorter than 1e-14");
    }
    total += seg;
  }
  return total;
}

void chord_derivatives(const DiscreteCurve& curve,
                       const std::vector<double>& s, double total,
                       const Vec3& shift, std::vector<Vec3>& d1,
                       std::vector<Vec3>& d2) {
  const auto& r = curve.nodes;
  const long n = static_cast<long>(r.size());
  d1.resize(n);
  d2.resize(n);

  auto node_at = [&](long j) -> Vec3 {
    if (!curve.closed) return r[j];
    const long rem = ((j % n) + n) % n;
    const long q = (j - rem) / n;
    return r[rem] + static_cast<double>(q) * shift;
  };
  auto s_at = [&](long j) -> double {
    if (!curve.closed) return s[j];
    const long rem = ((j % n) + n) % n;
    const long q = (j - rem) / n;
    return s[rem] + static_cast<double>(q) * total;
  };

  long idx[4];
  double xs[4];
  double w[4 * 3];
  for (long i = 0; i < n; ++i) {
    if (curve.closed || (i > 0 && i < n - 1)) {
      // Centered 3-point stencil with closed-form weights (exact for
      // quadratics); the generic recursion below is kept for the one-sided
      // boundary stencils only.
      Vec3 pm, pp;
      double sm, sp;
      if (i == 0) {
        pm = node_at(-1);
        sm = s_at(-1);
      } else {
        pm = r[i - 1];
        sm = s[i - 1];
      }
      if (i == n - 1) {
        pp = node_at(n);
        sp = s_at(n);
      } else {
        pp = r[i + 1];
        sp = s[i + 1];
      }
      const double h1 = s[i] - sm;
      const double h2 = sp - s[i];
      const double hsum = h1 + h2;
      const double inv = 1.0 / (h1 * h2 * hsum);
      d1[i] = inv * (-h2 * h2 * pm + (h2 - h1) * hsum * r[i] + h1 * h1 * pp);
      d2[i] = (2.0 * inv) * (h2 * pm - hsum * r[i] + h1 * pp);
      continue;
    }
    int cnt = 4;
    if (i == 0) {
      idx[0] = 0;
      idx[1] = 1;
      idx[2] = 2;
      idx[3] = 3;
      cnt = 4;
    } else {
      idx[0] = n - 4;
      idx[1] = n - 3;
      idx[2] = n - 2;
      idx[3] = n - 1;
      cnt = 4;
    }
    for (int k = 0; k < cnt; ++k) xs[k] = s_at(idx[k]);
    fd_weights(s_at(i), xs, cnt, 2, w);
    Vec3 first = Vec3::Zero();
    Vec3 second = Vec3::Zero();
    for (int k = 0; k < cnt; ++k) {
      const Vec3 p = node_at(idx[k]);
      first += w[k * 3 + 1] * p;
      second += w[k * 3 + 2] * p;
    }
    d1[i] = first;
    d2[i] = second;
  }
}

}  // namespace detail

FrenetData compute_frenet(const DiscreteCurve& curve) {
  std::vector<double> s;
  Vec3 shift;
  const double total = detail::chord_arclength(curve, s, shift);

  std::vector<Vec3> d1, d2;
  detail::chord_derivatives(curve, s, total, shift, d1, d2);

  const long n = static_cast<long>(curve.nodes.size());
  FrenetData f;
  f.closed = curve.closed;
  f.arclength = std::move(s);
  f.total_length = total;
  f.tangent.resize(n);
  f.normal.assign(n, Vec3::Zero());
  f.binormal.assign(n, Vec3::Zero());
  f.kappa.resize(n);
  f.tau.assign(n, 0.0);
  f.defined.assign(n, 0);

  for (long i = 0; i < n; ++i) {
    const double speed = d1[i].norm();
    if (speed < 1e-14) {
      throw DegenerateSegment("vanishing tangent at node " + std::to_string(i));
    }
    const Vec3 e = d1[i] / speed;
    f.tangent[i] = e;
    const Vec3 kvec = d2[i] - e.dot(d2[i]) * e;
    const double kappa = kvec.norm();
    f.kappa[i] = kappa;
    if (kappa >= kCurvatureFloor) {
      f.defined[i] = 1;
      f.normal[i] = kvec / kappa;
      f.binormal[i] = e.cross(f.normal[i]);
    }
  }

  // Torsion from the binormal derivative, tau = -n . db/ds, differencing only
  // over contiguous runs of frame-defined nodes: centered stencils where both
  // neighbours are defined, one-sided three-point (two-point for very short
  // runs) at run edges, zero for isolated defined nodes.
  auto defined_at = [&](long j) -> bool {
    if (curve.closed) {
      const long rem = ((j % n) + n) % n;
      return f.defined[rem] != 0;
    }
    if (j < 0 || j >= n) return false;
    return f.defined[j] != 0;
  };
  auto s_at = [&](long j) -> double {
    if (!curve.closed) return f.arclength[j];
    const long rem = ((j % n) + n) % n;
    const long q = (j - rem) / n;
    return f.arclength[rem] + static_cast<double>(q) * total;
  };
  auto b_at = [&](long j) -> const Vec3& {
    const long rem = curve.closed ? ((j % n) + n) % n : j;
    return f.binormal[rem];
  };

  for (long i = 0; i < n; ++i) {
    if (!f.defined[i]) continue;
    const bool left = defined_at(i - 1);
    const bool right = defined_at(i + 1);
    long st[3];
    int cnt = 0;
    if (left && right) {
      st[0] = i - 1;
      st[1] = i;
      st[2] = i + 1;
      cnt = 3;
    } else if (right && defined_at(i + 2)) {
      st[0] = i;
      st[1] = i + 1;
      st[2] = i + 2;
      cnt = 3;
    } else if (left && defined_at(i - 2)) {
      st[0] = i - 2;
      st[1] = i - 1;
      st[2] = i;
      cnt = 3;
    } else if (right) {
      st[0] = i;
      st[1] = i + 1;
      cnt = 2;
    } else if (left) {
      st[0] = i - 1;
      st[1] = i;
      cnt = 2;
    } else {
      f.tau[i] = 0.0;
      continue;
    }
    double xs[3];
    double w[3 * 2];
    for (int k = 0; k < cnt; ++k) xs[k] = s_at(st[k]);
    detail::fd_weights(s_at(i), xs, cnt, 1, w);
    Vec3 db = Vec3::Zero();
    for (int k = 0; k < cnt; ++k) db += w[k * 2 + 1] * b_at(st[k]);
    f.tau[i] = -db.dot(f.normal[i]);
  }

  return f;
}

DiscreteCurve resample_uniform(const DiscreteCurve& curve,
                               std::size_t n_nodes) {
  if (n_nodes < 4) {
    throw DomainError("resample_uniform needs at least 4 output nodes");
  }
  if (curve.nodes.size() < 4) {
    throw DomainError("curve needs at least 4 nodes");
  }

  const CurveSpline spline(curve.nodes, curve.closed, curve.axis,
                           curve.axial_period);
  const double total = spline.total_arclength();

  DiscreteCurve out;
  out.closed = curve.closed;
  out.axis = curve.axis;
  out.axial_period = curve.axial_period;
  out.nodes.resize(n_nodes);

  const double denom = curve.closed ? static_cast<double>(n_nodes)
                                    : static_cast<double>(n_nodes - 1);
  for (std::size_t j = 0; j < n_nodes; ++j) {
    const double target = total * (static_cast<double>(j) / denom);
    out.nodes[j] = spline.eval(spline.param_at_arclength(target));
  }
  return out;
}

double redundant_length(const DiscreteCurve& curve, const Vec3& axis,
                        double tangent_tol) {
  if (curve.closed) {
    throw DomainError("redundant_length is defined for open curves only");
  }
  const double axis_norm = axis.norm();
  if (axis_norm < 1e-14) {
    throw DomainError("redundant_length needs a nonzero axis");
  }
  const Vec3 u = axis / axis_norm;

  std::vector<double> s;
  Vec3 shift;
  const double total = detail::chord_arclength(curve, s, shift);
  std::vector<Vec3> d1, d2;
  detail::chord_derivatives(curve, s, total, shift, d1, d2);

  const double dev_front = (d1.front().normalized() - u).norm();
  const double dev_back = (d1.back().normalized() - u).norm();
  if (dev_front > tangent_tol || dev_back > tangent_tol) {
    throw NotAsymptoticallyStraight(
        "endpoint tangents deviate from the axis by " +
        std::to_string(dev_front) + " and " + std::to_string(dev_back) +
        " (tolerance " + std::to_string(tangent_tol) + ")");
  }
  return total - u.dot(curve.nodes.back() - curve.nodes.front());
}

double redundant_length(const DiscreteCurve& curve) {
  return redundant_length(curve, curve.axis);
}

}  // namespace vflab
