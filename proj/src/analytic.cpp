#include "vflab/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vflab/errors.hpp"

namespace vflab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

void HelixParams::validate() const {
  require_positive(a, "helix amplitude");
  if (!std::isfinite(tau) || tau == 0.0) {
    throw DomainError("helix wavenumber must be nonzero and finite");
  }
  if (a * std::abs(tau) > 0.1) {
    throw DomainError("helix slope a*|tau| = " + std::to_string(a * std::abs(tau)) +
                      " is outside the small-amplitude regime (limit 0.1)");
  }
}

bool HelixParams::outside_asymptotic_regime() const {
  return a * std::abs(tau) > 0.01;
}

void SolitonParams::validate() const {
  require_positive(kappa_hat, "peak curvature scale");
  if (!std::isfinite(tau)) {
    throw DomainError("torsion must be finite");
  }
}

double SolitonParams::amplitude() const {
  validate();
  return 2.0 * kappa_hat / (kappa_hat * kappa_hat + tau * tau);
}

Complex helix_transverse(const HelixParams& p, double nu, double t, double x) {
  p.validate();
  require_positive(nu, "nu");
  const double phase = p.tau * x - nu * p.tau * p.tau * t;
  return p.a * Complex(std::cos(phase), std::sin(phase));
}

DiscreteCurve helix_curve(const HelixParams& p, double nu, double t, double x0,
                          double dx, std::size_t n, bool screw_periodic) {
  p.validate();
  require_positive(nu, "nu");
  require_positive(dx, "dx");
  if (n < 4) throw DomainError("helix_curve needs at least 4 nodes");

  const double span = dx * static_cast<double>(n);
  if (screw_periodic) {
    const double turns = p.tau * span / kTwoPi;
    if (std::abs(turns - std::round(turns)) > 1e-9 * std::max(1.0, std::abs(turns))) {
      throw DomainError("screw-periodic helix needs an integer number of "
                        "turns; tau*n*dx/(2*pi) = " + std::to_string(turns));
    }
  }

  DiscreteCurve curve;
  curve.closed = screw_periodic;
  curve.axis = Vec3::UnitX();
  curve.axial_period = screw_periodic ? span : 0.0;
  curve.nodes.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x0 + dx * static_cast<double>(j);
    const Complex w = helix_transverse(p, nu, t, x);
    curve.nodes[j] = Vec3(x, w.real(), w.imag());
  }
  return curve;
}

ComplexField wave_packet(double a, double tau0, double dtau, double nu,
                         double t, double x0, double dx, std::size_t n) {
  require_positive(a, "packet amplitude");
  require_positive(dtau, "band half-width");
  require_positive(nu, "nu");
  if (!std::isfinite(tau0)) throw DomainError("carrier wavenumber must be finite");

  std::vector<Complex> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = packet_value(a, tau0, dtau, nu, t, x0 + dx * static_cast<double>(j));
  }
  return ComplexField(std::move(values), x0, dx, true);
}

Complex packet_value(double a, double tau0, double dtau, double nu, double t,
                     double x) {
  const double envelope = a * sinc(dtau * (x - 2.0 * nu * tau0 * t));
  const double phase = tau0 * x - nu * tau0 * tau0 * t;
  return envelope * Complex(std::cos(phase), std::sin(phase));
}

DiscreteCurve soliton_curve(const SolitonParams& p, double nu, double t,
                            double eta_max, std::size_t n) {
  p.validate();
  require_positive(nu, "nu");
  if (n < 4) throw DomainError("soliton_curve needs at least 4 nodes");
  if (!(eta_max >= 10.0)) {
    throw WindowTooNarrow("eta_max = " + std::to_string(eta_max) +
                          " leaves visible tails (need eta_max >= 10)");
  }

  const double a = p.amplitude();
  const double center = 2.0 * nu * p.tau * t;
  const double half = eta_max / p.kappa_hat;
  const double rotation = nu * (p.kappa_hat * p.kappa_hat - p.tau * p.tau) * t;

  DiscreteCurve curve;
  curve.closed = false;
  curve.axis = Vec3::UnitX();
  curve.nodes.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double l =
        center - half +
        2.0 * half * static_cast<double>(j) / static_cast<double>(n - 1);
    const double eta = p.kappa_hat * (l - center);
    const double sech = 1.0 / std::cosh(eta);
    const double theta = p.tau * l + rotation;
    curve.nodes[j] = Vec3(l - a * std::tanh(eta), a * sech * std::cos(theta),
                          a * sech * std::sin(theta));
  }
  return curve;
}

ComplexField soliton_field(const SolitonParams& p, double nu, double t,
                           double x0, double dx, std::size_t n) {
  p.validate();
  require_positive(nu, "nu");
  require_positive(dx, "dx");

  const double center = 2.0 * nu * p.tau * t;
  const double rotation = nu * (p.kappa_hat * p.kappa_hat - p.tau * p.tau) * t;
  std::vector<Complex> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double l = x0 + dx * static_cast<double>(j);
    const double amp =
        2.0 * p.kappa_hat / std::cosh(p.kappa_hat * (l - center));
    const double theta = p.tau * l + rotation;
    values[j] = amp * Complex(std::cos(theta), std::sin(theta));
  }
  return ComplexField(std::move(values), x0, dx, true);
}

double soliton_max_speed(double a, double nu) {
  require_positive(a, "transverse amplitude");
  require_positive(nu, "nu");
  return 2.0 * nu / a;
}

}  // namespace vflab
