#pragma once

#include <cstddef>

#include "vflab/curve.hpp"
#include "vflab/field.hpp"
#include "vflab/types.hpp"

namespace vflab {

/// Rotating-helix wave on a filament: amplitude a, wavenumber tau (signed;
/// the sign selects the screw handedness). Valid in the small-amplitude
/// regime a*|tau| <= 0.1; `outside_asymptotic_regime` flags a*|tau| > 0.01,
/// where the small-amplitude identities degrade visibly.
struct HelixParams {
  double a = 0.0;
  double tau = 0.0;

  void validate() const;
  bool outside_asymptotic_regime() const;
};

/// Localized traveling disturbance: peak curvature 2*kappa_hat, uniform
/// torsion tau. The transverse amplitude is a = 2*kappa_hat /
/// (kappa_hat^2 + tau^2).
struct SolitonParams {
  double kappa_hat = 1.0;
  double tau = 0.0;

  void validate() const;
  double amplitude() const;
};

/// Helix nodes at time t, sampled at x_j = x0 + j*dx. The transverse
/// components rotate rigidly at angular rate nu*tau^2. With
/// `screw_periodic`, the result is a closed screw-periodic curve of axial
/// period n*dx, which must hold an integer number of helix turns
/// (tau * n * dx a multiple of 2*pi, else DomainError).
DiscreteCurve helix_curve(const HelixParams& p, double nu, double t, double x0,
                          double dx, std::size_t n, bool screw_periodic);

/// Transverse field y + i z of the helix at position x and time t.
Complex helix_transverse(const HelixParams& p, double nu, double t, double x);

/// Dispersing hump: carrier at tau0, flat band half-width dtau, envelope
/// sin(u)/u with u = (x - 2*nu*tau0*t) * dtau. The envelope hump travels at
/// twice the carrier's phase speed.
ComplexField wave_packet(double a, double tau0, double dtau, double nu,
                         double t, double x0, double dx, std::size_t n);

/// Scalar evaluation of the same closed form.
Complex packet_value(double a, double tau0, double dtau, double nu, double t,
                     double x);

/// Localized-disturbance curve at time t, sampled uniformly in the natural
/// parameter l over |eta| <= eta_max with eta = kappa_hat*(l - 2*nu*tau*t).
/// The disturbance translates along the filament at speed 2*nu*tau and
/// rotates at rate nu*(kappa_hat^2 - tau^2). Requires eta_max >= 10
/// (WindowTooNarrow below that) and n >= 4.
DiscreteCurve soliton_curve(const SolitonParams& p, double nu, double t,
                            double eta_max, std::size_t n);

/// The corresponding intensity-carrying field 2*kappa_hat*sech(eta)*
/// exp(i*(tau*l + nu*(kappa_hat^2 - tau^2)*t)) on a periodic grid.
ComplexField soliton_field(const SolitonParams& p, double nu, double t,
                           double x0, double dx, std::size_t n);

/// Largest translation speed over the one-parameter family of disturbances
/// with fixed transverse amplitude a: 2*nu/a.
double soliton_max_speed(double a, double nu);

}  // namespace vflab
