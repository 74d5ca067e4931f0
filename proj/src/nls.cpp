#include "vflab/nls.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "detail.hpp"
#include "vflab/errors.hpp"
#include "vflab/spline.hpp"

namespace vflab {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Spectral derivative of a real sample vector on a periodic grid.
std::vector<double> spectral_derivative_real(const std::vector<double>& y,
                                             double domain_length) {
  const std::size_t n = y.size();
  std::vector<Complex> work(n);
  for (std::size_t j = 0; j < n; ++j) work[j] = Complex(y[j], 0.0);
  std::vector<Complex> hat;
  fft_forward(work, hat);
  const std::vector<double> k = fft_wavenumbers(n, domain_length);
  const Complex i_unit(0.0, 1.0);
  for (std::size_t m = 0; m < n; ++m) hat[m] *= i_unit * k[m];
  hat[n / 2] = Complex(0.0, 0.0);
  fft_inverse(hat, work);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = work[j].real();
  return out;
}

// Derivative of the complex samples: spectral when periodic, otherwise
// second-order finite differences (four-point one-sided at the ends).
std::vector<Complex> sample_derivative(const ComplexField& field) {
  if (field.periodic) return spectral_derivative(field);
  const std::size_t n = field.size();
  if (n < 4) throw DomainError("field needs at least 4 samples");
  std::vector<Complex> out(n);
  const double h = field.dx;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0) {
      out[j] = (-11.0 * field.values[0] + 18.0 * field.values[1] -
                9.0 * field.values[2] + 2.0 * field.values[3]) /
               (6.0 * h);
    } else if (j == n - 1) {
      out[j] = (11.0 * field.values[n - 1] - 18.0 * field.values[n - 2] +
                9.0 * field.values[n - 3] - 2.0 * field.values[n - 4]) /
               (6.0 * h);
    } else {
      out[j] = (field.values[j + 1] - field.values[j - 1]) / (2.0 * h);
    }
  }
  return out;
}

}  // namespace

ComplexField hasimoto_map(const FrenetData& frenet, double omega, double t) {
  const std::size_t n = frenet.size();
  if (n < 4) throw DomainError("hasimoto_map needs at least 4 nodes");
  if (!is_power_of_two(n)) {
    throw NonUniformGrid("node count " + std::to_string(n) +
                         " is not a power of two");
  }

  // Uniform arc-length spacing within 1e-4 relative (chords of a smooth
  // uniformly sampled curve vary at second order in the spacing, so a
  // resampled curve passes with a wide margin).
  const std::size_t n_seg = frenet.closed ? n : n - 1;
  const double mean_h = frenet.total_length / static_cast<double>(n_seg);
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    worst = std::max(worst, std::abs(frenet.arclength[i + 1] -
                                     frenet.arclength[i] - mean_h));
  }
  if (frenet.closed) {
    worst = std::max(worst, std::abs(frenet.total_length -
                                     frenet.arclength[n - 1] - mean_h));
  }
  if (worst > 1e-4 * mean_h) {
    throw NonUniformGrid("arc-length spacing varies by " +
                         std::to_string(worst / mean_h) +
                         " relative (limit 1e-4); resample first");
  }

  // A frame gap strictly between curved regions leaves the relative phase of
  // the two sides ambiguous; leading/trailing gaps are carried flat.
  std::size_t first_defined = n, last_defined = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (frenet.defined[i]) {
      if (first_defined == n) first_defined = i;
      last_defined = i;
    }
  }
  if (first_defined != n) {
    bool interior_gap = false;
    for (std::size_t i = first_defined; i <= last_defined; ++i) {
      if (!frenet.defined[i]) interior_gap = true;
    }
    if (frenet.closed && (first_defined > 0 || last_defined + 1 < n)) {
      interior_gap = true;  // on a loop every gap sits between curved regions
    }
    if (interior_gap) {
      throw UndefinedFrame("frame gap between curved regions: the phase "
                           "connection across it is ambiguous");
    }
  }

  std::vector<Complex> values(n);
  double psi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const double h = frenet.arclength[i] - frenet.arclength[i - 1];
      psi += 0.5 * (frenet.tau[i - 1] + frenet.tau[i]) * h;
    }
    const double phase = psi - omega * t;
    values[i] = frenet.kappa[i] * Complex(std::cos(phase), std::sin(phase));
  }
  return ComplexField(std::move(values), 0.0, mean_h, frenet.closed);
}

DiscreteCurve reconstruct_curve(const ComplexField& field, const Vec3& r0,
                                const Vec3& e0, const Vec3& n0) {
  const std::size_t n = field.size();
  if (n < 4) throw DomainError("reconstruct_curve needs at least 4 samples");
  if (std::abs(e0.norm() - 1.0) > 1e-9 || std::abs(n0.norm() - 1.0) > 1e-9 ||
      std::abs(e0.dot(n0)) > 1e-9) {
    throw DomainError("initial frame is not orthonormal to 1e-9");
  }

  // kappa = |Phi|, tau = phase gradient; vacuum samples inherit the nearest
  // defined torsion so the spline never sees junk ratios.
  std::vector<double> kappa(n), tau(n);
  std::vector<std::uint8_t> defined(n);
  const std::vector<Complex> dphi = sample_derivative(field);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex phi = field.values[j];
    const double rho = std::norm(phi);
    kappa[j] = std::abs(phi);
    defined[j] = rho >= kRhoFloor ? 1 : 0;
    tau[j] = defined[j] ? std::imag(std::conj(phi) * dphi[j]) / rho : 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (defined[j]) continue;
    std::size_t left = n, right = n;
    for (std::size_t d = 1; d < n; ++d) {
      if (left == n && j >= d && defined[j - d]) left = j - d;
      if (right == n && j + d < n && defined[j + d]) right = j + d;
      if (left != n || right != n) break;
    }
    if (left != n && (right == n || j - left <= right - j)) {
      tau[j] = tau[left];
    } else if (right != n) {
      tau[j] = tau[right];
    }
  }

  std::vector<double> grid(n);
  for (std::size_t j = 0; j < n; ++j) grid[j] = field.dx * static_cast<double>(j);
  CubicSpline kappa_s, tau_s;
  if (field.periodic) {
    kappa_s = CubicSpline::periodic(grid, kappa, field.length());
    tau_s = CubicSpline::periodic(grid, tau, field.length());
  } else {
    kappa_s = CubicSpline::natural(grid, kappa);
    tau_s = CubicSpline::natural(grid, tau);
  }

  struct FrameState {
    Vec3 r, e, nrm, b;
  };
  auto rhs = [&](const FrameState& y, double l) -> FrameState {
    const double k = std::max(kappa_s.eval(l), 0.0);
    const double tq = tau_s.eval(l);
    FrameState d;
    d.r = y.e;
    d.e = k * y.nrm;
    d.nrm = -k * y.e + tq * y.b;
    d.b = -tq * y.nrm;
    return d;
  };
  auto axpy = [](const FrameState& y, double f, const FrameState& d) {
    FrameState out;
    out.r = y.r + f * d.r;
    out.e = y.e + f * d.e;
    out.nrm = y.nrm + f * d.nrm;
    out.b = y.b + f * d.b;
    return out;
  };

  DiscreteCurve curve;
  curve.nodes.resize(n);
  FrameState y{r0, e0, n0, e0.cross(n0)};
  curve.nodes[0] = y.r;
  const double h = field.dx;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double l = grid[j];
    const FrameState k1 = rhs(y, l);
    const FrameState k2 = rhs(axpy(y, 0.5 * h, k1), l + 0.5 * h);
    const FrameState k3 = rhs(axpy(y, 0.5 * h, k2), l + 0.5 * h);
    const FrameState k4 = rhs(axpy(y, h, k3), l + h);
    y.r += (h / 6.0) * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
    y.e += (h / 6.0) * (k1.e + 2.0 * k2.e + 2.0 * k3.e + k4.e);
    y.nrm += (h / 6.0) * (k1.nrm + 2.0 * k2.nrm + 2.0 * k3.nrm + k4.nrm);
    y.b += (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
    y.e.normalize();
    y.nrm = (y.nrm - y.nrm.dot(y.e) * y.e).normalized();
    y.b = y.e.cross(y.nrm);
    curve.nodes[j + 1] = y.r;
  }
  return curve;
}

ComplexField nls_step(const ComplexField& field, double dt,
                      const PhysicalParams& params,
                      std::span<const double> potential) {
  params.validate();
  if (!field.periodic) {
    throw NonUniformGrid("split step needs a periodic field");
  }
  if (!std::isfinite(dt)) throw DomainError("time step must be finite");
  const std::size_t n = field.size();
  if (!potential.empty() && potential.size() != n) {
    throw DomainError("potential has " + std::to_string(potential.size()) +
                      " samples, field has " + std::to_string(n));
  }

  const double nu = params.nu;
  auto half_phase = [&](std::vector<Complex>& v) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u_ext = potential.empty() ? 0.0 : potential[j];
      const double rate = 0.5 * nu * std::norm(v[j]) - 0.5 * u_ext / nu;
      const double phase = 0.5 * dt * rate;
      v[j] *= Complex(std::cos(phase), std::sin(phase));
    }
  };

  std::vector<Complex> values = field.values;
  half_phase(values);

  std::vector<Complex> hat;
  fft_forward(values, hat);
  const std::vector<double> k = fft_wavenumbers(n, field.length());
  for (std::size_t m = 0; m < n; ++m) {
    const double phase = -nu * k[m] * k[m] * dt;
    hat[m] *= Complex(std::cos(phase), std::sin(phase));
  }
  fft_inverse(hat, values);

  half_phase(values);
  return ComplexField(std::move(values), field.x0, field.dx, true);
}

HydroFields hydro_fields(const ComplexField& field,
                         const PhysicalParams& params) {
  params.validate();
  if (!field.periodic) {
    throw NonUniformGrid("hydrodynamic fields use spectral derivatives and "
                         "need a periodic field");
  }
  const std::size_t n = field.size();
  HydroFields out;
  out.rho.resize(n);
  out.v.assign(n, 0.0);
  out.w.assign(n, 0.0);
  out.defined.assign(n, 0);

  for (std::size_t j = 0; j < n; ++j) out.rho[j] = std::norm(field.values[j]);
  const std::vector<Complex> dphi = spectral_derivative(field);
  const std::vector<double> drho = spectral_derivative_real(out.rho, field.length());

  for (std::size_t j = 0; j < n; ++j) {
    if (out.rho[j] < kRhoFloor) continue;
    out.defined[j] = 1;
    const double phase_gradient =
        std::imag(std::conj(field.values[j]) * dphi[j]) / out.rho[j];
    out.v[j] = 2.0 * params.nu * phase_gradient;
    out.w[j] = -params.nu * drho[j] / out.rho[j];
  }
  return out;
}

}  // namespace vflab
