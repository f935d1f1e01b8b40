#pragma once
#include "current_model.hpp"

#include <span>
#include <vector>

namespace qmag {

//! Scalar radial coefficients of the mean fields in the tensor basis
//!   <A> = a  (mu x rhat)
//!   <B> = b_tan mu + b_rad (mu.rhat) rhat
//!   <E> = e  (mu x rhat)
//! (a carries 1/length^2, b and e carry 1/length^3).  All four stay finite
//! down to r = 0; below r = 1e-2 eps the closed forms are evaluated by
//! their Taylor expansions to sidestep the 0/0 cancellations.
struct FieldCoeffs {
  double a = 0.0;
  double b_rad = 0.0;
  double b_tan = 0.0;
  double e = 0.0;
};

FieldCoeffs static_field_coeffs(const DipoleCurrent &c, double r);
FieldCoeffs expanding_field_coeffs(const DipoleCurrent &c, double t, double r);

//! Point-dipole long-distance form a = 1/(4 pi r^2) (for comparison plots).
double point_dipole_coeff(double r);

Vec3 static_vector_field(const DipoleCurrent &c, const Vec3 &r);
Vec3 static_magnetic_field(const DipoleCurrent &c, const Vec3 &r);
Vec3 expanding_vector_field(const DipoleCurrent &c, double t, const Vec3 &r);
Vec3 expanding_magnetic_field(const DipoleCurrent &c, double t, const Vec3 &r);
Vec3 expanding_electric_field(const DipoleCurrent &c, double t, const Vec3 &r);

//! 1d radial scan of the coefficients at fixed time.
struct RadialProfile {
  double t = 0.0;
  std::vector<double> radii;
  std::vector<FieldCoeffs> coeffs;
};
RadialProfile expanding_profile(const DipoleCurrent &c, double t,
                                std::span<const double> radii);
RadialProfile static_profile(const DipoleCurrent &c,
                             std::span<const double> radii);

//! Location and full width at half maximum of the |E| pulse riding the
//! causal front (expected within eps of r = t, width O(eps)).
struct FrontInfo {
  double r_front = 0.0;
  double width = 0.0;
};
FrontInfo locate_front(const DipoleCurrent &c, double t);

//! Mean-field energy excess over the static background,
//!   Int_shell d^3r (|<E>|^2 + |<B>|^2 - |<B_static>|^2)/2,
//! integrated over r_lo < r < r_hi (adaptive radial rule x 32-point polar
//! rule).  For coherent states the normal-ordered field energy equals the
//! mean-field energy, so this is the quantum excess as well.
double energy_localization(const DipoleCurrent &c, double t, double r_lo,
                           double r_hi);

} // namespace qmag
