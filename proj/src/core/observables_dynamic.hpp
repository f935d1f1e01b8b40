#pragma once
#include "current_model.hpp"
#include "oracles.hpp"

#include <array>
#include <complex>

namespace qmag {

//! Per-mode data of the state evolved from vacuum after the switch-on:
//! coherent amplitude alpha(t) = (e^{i w t} - 1) lambda and accumulated
//! phase functional Phi(t) = (1 + i w t - e^{i w t}) |lambda|^2.
struct ModeAmplitude {
  std::complex<double> alpha;
  std::complex<double> phi;
  double omega = 0.0;
  std::complex<double> lambda_static;
};

ModeAmplitude mode_amplitude(std::complex<double> lambda, double omega,
                             double t);

//! |<static|expanding>| = exp(-N/2); time independent.
double overlap_static_expanding(double n_tilde);

//! <H0>(t) = -2 E - 2 Int W cos(w t)/w^2, by quadrature.
double free_field_energy(const SpectralWeight &w, double e_tilde, double t,
                         const Tolerance &tol = {});

//! Dipole closed form -2E [1 - e^{-t^2/2eps^2} + (t/eps)^2 e^{-t^2/2eps^2}].
double free_field_energy_dipole(const DipoleCurrent &c, double t);

//! t -> infinity limit -2E (Riemann-Lebesgue).
double free_field_energy_limit(double e_tilde);

//! <H1>(t) = -<H0>(t); the total energy of the expanding state vanishes.
double interaction_energy(double h0_of_t);

//! Energy-power moments h_n = Int W w^{n-3} of the spectral weight,
//! n = 2..4.  These are the cumulants of the Hamiltonian distribution.
struct CumulantSet {
  double h2 = 0.0, h3 = 0.0, h4 = 0.0;
  double h(int n) const;
};

CumulantSet cumulants(const SpectralWeight &w, int n_max = 4,
                      const Tolerance &tol = {});
CumulantSet cumulants_dipole(const DipoleCurrent &c);

//! Closed form h_n = mu^2 2^{n/2} Gamma(1 + n/2) / (6 pi^2 eps^{n+2}).
double cumulant_dipole(const DipoleCurrent &c, int n);

//! Hamiltonian statistics in the expanding state: mean 0, <H^2> = h2,
//! <H^3> = h3, <H^4> = h4 + 3 h2^2; sigma = sqrt(h2),
//! skewness h3/h2^{3/2}, excess kurtosis h4/h2^2.
struct EnergyStats {
  double mean = 0.0;
  double variance = 0.0;
  double sigma = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0; // raw moments <H^n>
};

EnergyStats energy_stats(const CumulantSet &c);

//! Survival amplitude F(s) = <psi(t)|psi(t+s)>
//!   = exp( Int dw W(w) (e^{-i s w} - 1 + i s w)/w^3 ),
//! independent of t; |F| <= 1, F(0) = 1.
std::complex<double> survival_amplitude(const SpectralWeight &w, double s,
                                        const Tolerance &tol = {});

//! First four Hamiltonian moments <H^n> extracted from F by 4th-order
//! central differences at step 0.05*eps_scale with one Richardson step.
std::array<double, 4> survival_moments(const SpectralWeight &w,
                                       double eps_scale,
                                       const Tolerance &tol = {});

//! N(t) = 2 Ntilde - 2 Int W cos(w t)/w^3, by quadrature.
double photon_number(const SpectralWeight &w, double n_tilde, double t,
                     const Tolerance &tol = {});

//! Dipole closed form N(t) = (mu/eps)^2 (1/3pi^2) 2u daw(u), u = t/(sqrt2 eps).
double photon_number_dipole(const DipoleCurrent &c, double t);

//! t -> infinity limit 2 Ntilde.
double photon_number_limit(double n_tilde);

//! Large-time algebraic tail 2N(1 + (eps/t)^2); valid for t >= 10 eps.
double photon_number_asymptotic(double n_tilde, double eps, double t);

//! sigma_N(t) = sqrt(N(t)) (coherent state, Poissonian).
double sigma_photon(double n_of_t);

//! Overlap assembled the long way from the mode machinery (phases and
//! Gaussian overlaps integrated against the weight) -- equals
//! exp(-Ntilde/2) identically; kept as a cross-check route.
std::complex<double> overlap_via_modes(const SpectralWeight &w, double t,
                                       const Tolerance &tol = {});

} // namespace qmag
