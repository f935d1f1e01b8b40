#pragma once
#include "current_model.hpp"
#include "oracles.hpp"

#include <utility>
#include <vector>

namespace qmag {

//! Everything the magnetostatic ground state pins down: its (negative)
//! energy, the photon content with its Poissonian spread, and the
//! free-field/interaction split.  The energy spread in this state
//! vanishes identically, see sigma_e_tilde().
struct StaticReport {
  double energy_tilde = 0.0;   // <= 0
  double photons_tilde = 0.0;  // >= 0
  double sigma_n_tilde = 0.0;  // sqrt(photons_tilde)
  double h0_expect = 0.0;      // -energy_tilde
  double h1_expect = 0.0;      // 2 energy_tilde

  //! The ground state is an energy eigenstate: zero energy spread.
  static double sigma_e_tilde() { return 0.0; }
};

//! Excitation numbers on top of the ground state: (omega, n) pairs.
struct OccupationList {
  std::vector<std::pair<double, int>> entries;
};

//! Ground-state energy -Int W/w^2 by quadrature; DivergenceError if the
//! integral fails to converge.
double static_energy(const SpectralWeight &w, const Tolerance &tol = {});

//! Dipole closed form: -mu^2 / (3 (sqrt(2 pi) eps)^3).
double static_energy_dipole(const DipoleCurrent &c);

//! Photon number Int W/w^3 by quadrature.
double static_photon_number(const SpectralWeight &w,
                            const Tolerance &tol = {});

//! Dipole closed form: (mu/eps)^2 / (6 pi^2).
double static_photon_number_dipole(const DipoleCurrent &c);

//! Virial-like split of the ground-state energy:
//! <H0> = -E, <H1> = 2E, so <H1> = -2 <H0>.
std::pair<double, double> static_virial_split(double e_tilde);

struct ExcitedSplit {
  double h0 = 0.0;
  double h1 = 0.0;
  double total = 0.0;
};

//! Excited-eigenstate expectations: <H0> = -E + sum n w, <H1> = 2E; the
//! interaction part does not feel the occupations.
ExcitedSplit excited_state_split(double e_tilde, const OccupationList &occ);

StaticReport static_report_dipole(const DipoleCurrent &c);
StaticReport static_report(const SpectralWeight &w, const Tolerance &tol = {});

} // namespace qmag
