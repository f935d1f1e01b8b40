#include "units_scenarios.hpp"

#include "current_model.hpp"
#include "errors.hpp"
#include "observables_dynamic.hpp"
#include "observables_static.hpp"

#include <cmath>

namespace qmag {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PhysicalConstants PhysicalConstants::paper_precision() {
  PhysicalConstants pc;
  pc.alpha = 1.0 / 137.0;
  pc.compton_m = 2.4e-12;
  return pc;
}

Scenario microscopic_scenario() {
  return {"microscopic", 1e-3, 1e-15, EnergyUnit::electron_rest};
}

Scenario macroscopic_scenario() {
  return {"macroscopic", 7.7e23, 0.01, EnergyUnit::joule};
}

double iron_ball_beta(double radius_m, double density_kg_m3,
                      double sat_magnetization_j_per_t_kg,
                      const PhysicalConstants &pc) {
  if (!(radius_m > 0.0) || !(density_kg_m3 > 0.0) ||
      !(sat_magnetization_j_per_t_kg > 0.0))
    throw DomainError("iron_ball_beta: inputs must be positive");
  const double volume = 4.0 / 3.0 * kPi * radius_m * radius_m * radius_m;
  const double moment = volume * density_kg_m3 * sat_magnetization_j_per_t_kg;
  return moment / pc.bohr_magneton_j_per_t;
}

double mu_over_eps(const Scenario &s, const PhysicalConstants &pc) {
  if (s.beta < 0.0 || !(s.eps_si > 0.0))
    throw DomainError("mu_over_eps: need beta >= 0 and eps > 0");
  return s.beta * std::sqrt(pc.alpha / (4.0 * kPi)) * pc.compton_m / s.eps_si;
}

double energy_natural_to_si(double e_natural_per_m,
                            const PhysicalConstants &pc, EnergyUnit unit) {
  // natural energies carry dimension 1/length; hbar c restores SI
  const double hbar_c_mev_m = pc.hbar_c_mev_fm * 1e-15;
  const double value_mev = e_natural_per_m * hbar_c_mev_m;
  switch (unit) {
  case EnergyUnit::electron_rest:
    return value_mev / pc.electron_mev;
  case EnergyUnit::joule:
    return value_mev * pc.joule_per_mev;
  }
  return value_mev;
}

double energy_si_to_natural(double e_si, const PhysicalConstants &pc,
                            EnergyUnit unit) {
  const double hbar_c_mev_m = pc.hbar_c_mev_fm * 1e-15;
  double value_mev = e_si;
  switch (unit) {
  case EnergyUnit::electron_rest:
    value_mev = e_si * pc.electron_mev;
    break;
  case EnergyUnit::joule:
    value_mev = e_si / pc.joule_per_mev;
    break;
  }
  return value_mev / hbar_c_mev_m;
}

ScenarioReport scenario_report(const Scenario &s, const PhysicalConstants &pc) {
  ScenarioReport rep;
  rep.scenario = s;
  rep.mu_over_eps = mu_over_eps(s, pc);

  // work in natural units with eps = 1: energies come out in 1/eps
  const DipoleCurrent dip({0.0, 0.0, rep.mu_over_eps}, 1.0);
  const double e_tilde_nat = static_energy_dipole(dip); // units 1/eps
  const double n_tilde = static_photon_number_dipole(dip);
  const double sigma_e_nat = std::sqrt(cumulant_dipole(dip, 2));

  // convert 1/eps energies through hbar c at the scenario's eps
  const double e_per_eps = 1.0 / s.eps_si;
  rep.energy_static =
      energy_natural_to_si(e_tilde_nat * e_per_eps, pc, s.unit);
  rep.sigma_e_static = 0.0;
  rep.photons_static = n_tilde;
  rep.sigma_n_static = std::sqrt(n_tilde);

  rep.energy_expanding = 0.0;
  rep.sigma_e_expanding =
      energy_natural_to_si(sigma_e_nat * e_per_eps, pc, s.unit);
  rep.photons_expanding = photon_number_limit(n_tilde);
  rep.sigma_n_expanding = std::sqrt(rep.photons_expanding);

  rep.log_overlap = -0.5 * n_tilde;
  rep.overlap = std::exp(rep.log_overlap);
  return rep;
}

} // namespace qmag
