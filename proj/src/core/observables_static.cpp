#include "observables_static.hpp"

#include "errors.hpp"

#include <cmath>

namespace qmag {

namespace {
constexpr double kPi = 3.14159265358979323846;

double converged_value(const QuadResult &q, const char *what) {
  if (!q.converged)
    throw DivergenceError(std::string(what) +
                          ": weight integral did not converge");
  return q.value;
}
} // namespace

double static_energy(const SpectralWeight &w, const Tolerance &tol) {
  return -converged_value(weight_moment(w, -2, tol), "static_energy");
}

double static_energy_dipole(const DipoleCurrent &c) {
  const double se = std::sqrt(2.0 * kPi) * c.eps;
  const double mu = c.mu_mag();
  return -mu * mu / (3.0 * se * se * se);
}

double static_photon_number(const SpectralWeight &w, const Tolerance &tol) {
  return converged_value(weight_moment(w, -3, tol), "static_photon_number");
}

double static_photon_number_dipole(const DipoleCurrent &c) {
  const double x = c.mu_mag() / c.eps;
  return x * x / (6.0 * kPi * kPi);
}

std::pair<double, double> static_virial_split(double e_tilde) {
  if (e_tilde > 0.0)
    throw DomainError("static_virial_split: ground-state energy must be <= 0");
  return {-e_tilde, 2.0 * e_tilde};
}

ExcitedSplit excited_state_split(double e_tilde, const OccupationList &occ) {
  double excitation = 0.0;
  for (const auto &[omega, n] : occ.entries) {
    if (n < 0 || !(omega > 0.0))
      throw DomainError("excited_state_split: need omega > 0 and n >= 0");
    excitation += n * omega;
  }
  return {-e_tilde + excitation, 2.0 * e_tilde, e_tilde + excitation};
}

namespace {
StaticReport assemble(double e, double n) {
  StaticReport r;
  r.energy_tilde = e;
  r.photons_tilde = n;
  r.sigma_n_tilde = std::sqrt(n);
  const auto [h0, h1] = static_virial_split(e);
  r.h0_expect = h0;
  r.h1_expect = h1;
  return r;
}
} // namespace

StaticReport static_report_dipole(const DipoleCurrent &c) {
  return assemble(static_energy_dipole(c), static_photon_number_dipole(c));
}

StaticReport static_report(const SpectralWeight &w, const Tolerance &tol) {
  return assemble(static_energy(w, tol), static_photon_number(w, tol));
}

} // namespace qmag
