#pragma once
#include <string>

namespace qmag {

//! Constants used by the SI scenarios, 6 significant figures.
//! paper_precision() swaps in the rounded values (alpha = 1/137,
//! lambda_C = 2.4e-12 m) so table reproduction can be tested under the
//! same rounding the reference numbers were produced with.
struct PhysicalConstants {
  double alpha = 1.0 / 137.036;        // fine-structure constant (CODATA)
  double compton_m = 2.42631e-12;      // electron Compton wavelength h/(m_e c)
  double hbar_c_mev_fm = 197.327;      // hbar c
  double electron_mev = 0.510999;      // m_e c^2
  double joule_per_mev = 1.60218e-13;  // 1 MeV in J
  double bohr_magneton_j_per_t = 9.27401e-24;

  static PhysicalConstants paper_precision();
};

enum class EnergyUnit { electron_rest, joule };

//! SI parameter set: mu = beta * mu_B, smearing width in metres.
struct Scenario {
  std::string name;
  double beta = 0.0;
  double eps_si = 1.0;
  EnergyUnit unit = EnergyUnit::electron_rest;
};

Scenario microscopic_scenario(); // beta = 1e-3,   eps = 1 fm (neutron scale)
Scenario macroscopic_scenario(); // beta = 7.7e23, eps = 0.01 m (iron ball)

//! beta of a maximally magnetised iron ball: (4/3) pi R^3 rho M_sat / mu_B.
double iron_ball_beta(double radius_m, double density_kg_m3,
                      double sat_magnetization_j_per_t_kg,
                      const PhysicalConstants &pc);

//! The one dimensionless knob: mu/eps = beta sqrt(alpha/4pi) lambda_C/eps.
double mu_over_eps(const Scenario &s, const PhysicalConstants &pc);

//! natural-unit energy (dimension 1/metre) -> requested SI unit, and back
double energy_natural_to_si(double e_natural_per_m,
                            const PhysicalConstants &pc, EnergyUnit unit);
double energy_si_to_natural(double e_si, const PhysicalConstants &pc,
                            EnergyUnit unit);

//! One full table row set for a scenario: static-state and expanding-state
//! energies, photon numbers, spreads, and the overlap (plus its log, which
//! survives the macroscopic underflow).
struct ScenarioReport {
  Scenario scenario;
  double mu_over_eps = 0.0;
  // static state
  double energy_static = 0.0;   // requested unit
  double sigma_e_static = 0.0;  // identically zero
  double photons_static = 0.0;  // Ntilde
  double sigma_n_static = 0.0;  // sqrt(Ntilde)
  // expanding state
  double energy_expanding = 0.0; // identically zero
  double sigma_e_expanding = 0.0;
  double photons_expanding = 0.0; // N(infinity) = 2 Ntilde
  double sigma_n_expanding = 0.0; // sqrt(2 Ntilde)
  // overlap between the two states
  double overlap = 0.0;     // 0 when underflowed
  double log_overlap = 0.0; // -Ntilde/2, always finite
};

ScenarioReport scenario_report(const Scenario &s, const PhysicalConstants &pc);

} // namespace qmag
