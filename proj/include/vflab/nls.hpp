#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vflab/curve.hpp"
#include "vflab/field.hpp"
#include "vflab/types.hpp"

namespace vflab {

/// Curvature-and-torsion complex field of a filament:
/// Phi(l) = kappa(l) * exp(i * (integral of tau dl from the first node
/// - omega*t)), torsion accumulated by the trapezoid rule. The input grid
/// must be uniform in arc length (resample first; NonUniformGrid otherwise).
/// Torsion gaps where curvature is below the floor are carried with a flat
/// phase; a frame gap strictly between curved regions throws UndefinedFrame
/// only if torsion is needed there but undefined. Node count must be a power
/// of two.
ComplexField hasimoto_map(const FrenetData& frenet, double omega, double t);

/// Inverse construction: integrate the frame equations
/// de/dl = kappa n, dn/dl = -kappa e + tau b, db/dl = -tau n and then
/// dr/dl = e with classical RK4 in l (spline-interpolated kappa, tau at
/// half-steps; frame re-orthonormalized every step). kappa = |Phi|; tau is
/// the phase gradient Im(conj(Phi) Phi') / |Phi|^2, held at its nearest
/// defined value across vacuum gaps (|Phi|^2 below the intensity floor).
/// The initial frame (e0, n0) must be orthonormal to 1e-9.
DiscreteCurve reconstruct_curve(const ComplexField& field, const Vec3& r0,
                                const Vec3& e0, const Vec3& n0);

/// One Strang split step of the focusing cubic Schroedinger dynamics
/// d(Phi)/dt = i*nu*(Phi_ll + |Phi|^2 Phi / 2 - U Phi / (2 nu^2)):
/// half nonlinear/potential phase rotation (exact), full spectral linear
/// step (exact), half nonlinear/potential again. Norm-conserving by
/// construction. `potential` is a static external profile U(l) sampled on
/// the grid (empty = none); U is a potential per unit transported mass, and
/// the 1/(2 nu^2) coupling makes the associated hydrodynamic force per unit
/// mass exactly -dU/dl, so the modified energy
/// integral of rho*((v^2 + w^2 - nu^2 rho)/2 + U) dl is an invariant of the
/// continuous flow. Periodic power-of-two grid required.
ComplexField nls_step(const ComplexField& field, double dt,
                      const PhysicalParams& params,
                      std::span<const double> potential = {});

/// Intensity/velocity representation of a field: rho = |Phi|^2,
/// v = 2*nu*tau with tau the spectral phase gradient, w = -nu*(d rho/dl)/rho.
/// Entries with rho below the intensity floor are undefined (zeroed).
struct HydroFields {
  std::vector<double> rho;
  std::vector<double> v;
  std::vector<double> w;
  std::vector<std::uint8_t> defined;
};

HydroFields hydro_fields(const ComplexField& field,
                         const PhysicalParams& params);

}  // namespace vflab
