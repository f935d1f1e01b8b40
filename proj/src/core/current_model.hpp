#pragma once
#include "geometry.hpp"
#include "quadrature.hpp"

#include <functional>

namespace qmag {

//! Gaussian-smeared magnetic dipole source
//!   j(r) = (mu x r) (2/eps^2) delta_eps(r),
//! normalised so that Int r x j / 2 = mu.  `eps` is the smearing width;
//! natural units (hbar = c = 1) throughout, so mu carries dimension length.
struct DipoleCurrent {
  Vec3 mu;
  double eps = 1.0;

  DipoleCurrent(const Vec3 &mu_, double eps_) : mu(mu_), eps(eps_) {
    if (!(eps > 0.0))
      throw DomainError("DipoleCurrent: eps must be > 0");
    if (!std::isfinite(norm(mu)))
      throw DomainError("DipoleCurrent: mu must be finite");
  }
  double mu_mag() const { return norm(mu); }
};

//! A general conserved current enters all global observables only through
//! its momentum-space transverse strength: every mode sum reduces to
//! Int_0^inf dw W(w) w^p with
//!   W(w) = w^2/(2 (2pi)^3) * Int dOmega |J(w khat)|^2.
//! The decay tag tells the quadrature oracle where to truncate.
struct SpectralWeight {
  std::function<double(double)> w;
  DecayInfo decay;
};

//! Momentum-space current J(k) = Int d^3r j(r) exp(-i k.r); must be
//! transverse, k.J(k) = 0.
struct FourierCurrent {
  std::function<CVec3(const Vec3 &)> jk;
};

//! j(r) of the smeared dipole in position space.
Vec3 dipole_j_position(const DipoleCurrent &c, const Vec3 &r);

//! J(k) = -i (mu x k) exp(-eps^2 |k|^2 / 4); transverse by construction.
CVec3 dipole_j_fourier(const DipoleCurrent &c, const Vec3 &k);

FourierCurrent dipole_fourier_current(const DipoleCurrent &c);

//! Closed-form spectral weight of the dipole:
//!   W(w) = mu^2 w^4 exp(-eps^2 w^2 / 2) / (6 pi^2)
//! (angular factor Int dOmega sin^2 = 8 pi/3).
SpectralWeight dipole_spectral_weight(const DipoleCurrent &c);

//! Numerical spectral weight of an arbitrary transverse current via a
//! product Gauss-Legendre (cos theta) x trapezoid (phi) sphere rule.
//! Throws InvalidCurrentError if sampling finds k.J/|J| beyond 1e-8.
SpectralWeight general_spectral_weight(const FourierCurrent &jf,
                                       const DecayInfo &decay,
                                       int n_polar = 32);

//! Transverse projector sum_sigma eta_i eta_j = delta_ij - k_i k_j/|k|^2.
std::array<std::array<double, 3>, 3>
polarization_completeness(const Vec3 &k);

} // namespace qmag
