#include "observables_dynamic.hpp"

#include "errors.hpp"
#include "special_functions.hpp"

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

ModeAmplitude mode_amplitude(std::complex<double> lambda, double omega,
                             double t) {
  if (t < 0.0)
    throw DomainError("mode_amplitude: the current is off for t < 0");
  if (!(omega > 0.0))
    throw DomainError("mode_amplitude: omega must be > 0");
  const std::complex<double> phase = std::polar(1.0, omega * t);
  const double l2 = std::norm(lambda);
  ModeAmplitude m;
  m.alpha = (phase - 1.0) * lambda;
  m.phi = (std::complex<double>(1.0, omega * t) - phase) * l2;
  m.omega = omega;
  m.lambda_static = lambda;
  return m;
}

double overlap_static_expanding(double n_tilde) {
  if (!(n_tilde >= 0.0) || !std::isfinite(n_tilde))
    throw DomainError("overlap_static_expanding: need finite Ntilde >= 0");
  return std::exp(-0.5 * n_tilde);
}

double free_field_energy(const SpectralWeight &w, double e_tilde, double t,
                         const Tolerance &tol) {
  if (t < 0.0)
    throw DomainError("free_field_energy: t must be >= 0");
  const double osc =
      converged_value(weight_cosine_moment(w, 2, t, tol), "free_field_energy");
  return -2.0 * e_tilde - 2.0 * osc;
}

double free_field_energy_dipole(const DipoleCurrent &c, double t) {
  if (t < 0.0)
    throw DomainError("free_field_energy_dipole: t must be >= 0");
  const double tau2 = t * t / (c.eps * c.eps);
  const double damp = std::exp(-0.5 * tau2);
  const double se = std::sqrt(2.0 * kPi) * c.eps;
  const double e_tilde = -c.mu_mag() * c.mu_mag() / (3.0 * se * se * se);
  return -2.0 * e_tilde * (1.0 - damp + tau2 * damp);
}

double free_field_energy_limit(double e_tilde) { return -2.0 * e_tilde; }

double interaction_energy(double h0_of_t) { return -h0_of_t; }

double CumulantSet::h(int n) const {
  switch (n) {
  case 2:
    return h2;
  case 3:
    return h3;
  case 4:
    return h4;
  default:
    throw DomainError("CumulantSet: only n = 2..4 are tabulated");
  }
}

CumulantSet cumulants(const SpectralWeight &w, int n_max,
                      const Tolerance &tol) {
  if (n_max < 2 || n_max > 4)
    throw DomainError("cumulants: n_max must be in [2, 4]");
  CumulantSet c;
  c.h2 = converged_value(weight_moment(w, -1, tol), "cumulants");
  if (n_max >= 3)
    c.h3 = converged_value(weight_moment(w, 0, tol), "cumulants");
  if (n_max >= 4)
    c.h4 = converged_value(weight_moment(w, 1, tol), "cumulants");
  return c;
}

double cumulant_dipole(const DipoleCurrent &c, int n) {
  if (n < 2)
    throw DomainError("cumulant_dipole: n must be >= 2");
  const double mu2 = c.mu_mag() * c.mu_mag();
  // 2^{n/2} Gamma(1 + n/2) = 2^{n/2} Gamma((n+2)/2)
  const double gpart = std::exp2(0.5 * n) * gamma_half(n + 2);
  return mu2 * gpart / (6.0 * kPi * kPi * std::pow(c.eps, n + 2));
}

CumulantSet cumulants_dipole(const DipoleCurrent &c) {
  return {cumulant_dipole(c, 2), cumulant_dipole(c, 3), cumulant_dipole(c, 4)};
}

EnergyStats energy_stats(const CumulantSet &c) {
  EnergyStats s;
  s.mean = 0.0;
  s.variance = c.h2;
  s.m2 = c.h2;
  s.m3 = c.h3;
  s.m4 = c.h4 + 3.0 * c.h2 * c.h2;
  if (!(c.h2 > 0.0)) {
    if (c.h3 != 0.0 || c.h4 != 0.0)
      throw DomainError("energy_stats: h2 = 0 with non-zero higher "
                        "cumulants is inconsistent");
    throw DomainError("energy_stats: degenerate distribution (h2 = 0); "
                      "skewness/kurtosis undefined");
  }
  s.sigma = std::sqrt(c.h2);
  s.skewness = c.h3 / (c.h2 * s.sigma);
  s.excess_kurtosis = c.h4 / (c.h2 * c.h2);
  return s;
}

std::complex<double> survival_amplitude(const SpectralWeight &w, double s,
                                        const Tolerance &tol) {
  // exponent = Int W (e^{-i s w} - 1 + i s w)/w^3
  //   Re: Int W cos(s w)/w^3 - Int W/w^3
  //   Im: s Int W/w^2 - Int W sin(s w)/w^3
  const double as = std::abs(s);
  const double sgn = (s >= 0.0) ? 1.0 : -1.0;
  const double n_tilde =
      converged_value(weight_moment(w, -3, tol), "survival_amplitude");
  const double m2 =
      converged_value(weight_moment(w, -2, tol), "survival_amplitude");
  const double cosm = converged_value(weight_cosine_moment(w, 3, as, tol),
                                      "survival_amplitude");
  const double sinm = converged_value(weight_sine_moment(w, 3, as, tol),
                                      "survival_amplitude");
  const double re = cosm - n_tilde;
  const double im = sgn * (as * m2 - sinm);
  return std::exp(std::complex<double>(re, im));
}

std::array<double, 4> survival_moments(const SpectralWeight &w,
                                       double eps_scale,
                                       const Tolerance &tol) {
  if (!(eps_scale > 0.0))
    throw DomainError("survival_moments: eps_scale must be > 0");
  // Step choice: the n-th stencil amplifies value noise like h^-n, so the
  // step cannot be taken too small; 0.05*eps with one Richardson pass
  // keeps truncation ~1e-8 and roundoff ~1e-6 on the fourth moment.
  const double h = 0.05 * eps_scale;
  Tolerance qtol(std::min(tol.rel, 1e-14), tol.abs);

  const auto d1 = [](const std::array<std::complex<double>, 7> &f, double hh) {
    return (-f[5] + 8.0 * f[4] - 8.0 * f[2] + f[1]) / (12.0 * hh);
  };
  const auto d2 = [](const std::array<std::complex<double>, 7> &f, double hh) {
    return (-f[5] + 16.0 * f[4] - 30.0 * f[3] + 16.0 * f[2] - f[1]) /
           (12.0 * hh * hh);
  };
  const auto d3 = [](const std::array<std::complex<double>, 7> &f, double hh) {
    return (f[0] - 8.0 * f[1] + 13.0 * f[2] - 13.0 * f[4] + 8.0 * f[5] -
            f[6]) /
           (8.0 * hh * hh * hh);
  };
  const auto d4 = [](const std::array<std::complex<double>, 7> &f, double hh) {
    return (-f[0] + 12.0 * f[1] - 39.0 * f[2] + 56.0 * f[3] - 39.0 * f[4] +
            12.0 * f[5] - f[6]) /
           (6.0 * hh * hh * hh * hh);
  };

  std::array<std::complex<double>, 7> f_h, f_h2;
  for (int k = -3; k <= 3; ++k) {
    f_h[static_cast<size_t>(k + 3)] = survival_amplitude(w, k * h, qtol);
    f_h2[static_cast<size_t>(k + 3)] =
        survival_amplitude(w, k * h * 0.5, qtol);
  }

  std::array<double, 4> out{};
  const std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> ipow = i_unit;
  const std::array<std::complex<double>, 4> derivs_h = {
      d1(f_h, h), d2(f_h, h), d3(f_h, h), d4(f_h, h)};
  const std::array<std::complex<double>, 4> derivs_h2 = {
      d1(f_h2, 0.5 * h), d2(f_h2, 0.5 * h), d3(f_h2, 0.5 * h),
      d4(f_h2, 0.5 * h)};
  for (int n = 0; n < 4; ++n) {
    const std::complex<double> rich =
        (16.0 * derivs_h2[static_cast<size_t>(n)] -
         derivs_h[static_cast<size_t>(n)]) /
        15.0;
    out[static_cast<size_t>(n)] = (ipow * rich).real();
    ipow *= i_unit;
  }
  return out;
}

double photon_number(const SpectralWeight &w, double n_tilde, double t,
                     const Tolerance &tol) {
  if (t < 0.0)
    throw DomainError("photon_number: t must be >= 0");
  const double osc =
      converged_value(weight_cosine_moment(w, 3, t, tol), "photon_number");
  return 2.0 * n_tilde - 2.0 * osc;
}

double photon_number_dipole(const DipoleCurrent &c, double t) {
  if (t < 0.0)
    throw DomainError("photon_number_dipole: t must be >= 0");
  const double x = c.mu_mag() / c.eps;
  const double u = t / (std::sqrt(2.0) * c.eps);
  return x * x / (3.0 * kPi * kPi) * 2.0 * u * dawson(u);
}

double photon_number_limit(double n_tilde) { return 2.0 * n_tilde; }

double photon_number_asymptotic(double n_tilde, double eps, double t) {
  if (!(eps > 0.0))
    throw DomainError("photon_number_asymptotic: eps must be > 0");
  if (t < 10.0 * eps)
    throw RegimeError("photon_number_asymptotic: valid for t >= 10 eps");
  const double r = eps / t;
  return 2.0 * n_tilde * (1.0 + r * r);
}

double sigma_photon(double n_of_t) {
  if (n_of_t < 0.0)
    throw DomainError("sigma_photon: photon number must be >= 0");
  return std::sqrt(n_of_t);
}

std::complex<double> overlap_via_modes(const SpectralWeight &w, double t,
                                       const Tolerance &tol) {
  if (t < 0.0)
    throw DomainError("overlap_via_modes: t must be >= 0");
  // ln<static|expanding> assembled term by term, each from its own
  // quadrature, with the two occupation integrals and the two phase
  // integrals deliberately evaluated through different numerical routes
  // (plain adaptive vs oscillation-segmented).  The time dependence only
  // cancels in the assembled sum:
  //   -Ntilde/2  - |alpha|^2/2  + Re(lambda* alpha e^{-iwt})
  //   + i [Im Phi + Im(lambda* alpha e^{-iwt}) + E t]
  const double n_tilde =
      converged_value(weight_moment(w, -3, tol), "overlap_via_modes");
  const double m2 =
      converged_value(weight_moment(w, -2, tol), "overlap_via_modes");
  const double c3 = converged_value(weight_cosine_moment(w, 3, t, tol),
                                    "overlap_via_modes");
  const double s3 =
      converged_value(weight_sine_moment(w, 3, t, tol), "overlap_via_modes");
  // occupation Int W (1 - cos w t)/w^3 by the plain adaptive route
  const double occ = converged_value(
      weight_custom_moment(
          w,
          [t](double omega) {
            return (1.0 - std::cos(omega * t)) / (omega * omega * omega);
          },
          tol),
      "overlap_via_modes");
  // Phi phase Int W (w t - sin w t)/w^3, also plain adaptive
  const double phi_phase = converged_value(
      weight_custom_moment(
          w,
          [t](double omega) {
            return (omega * t - std::sin(omega * t)) /
                   (omega * omega * omega);
          },
          tol),
      "overlap_via_modes");

  const double re = -0.5 * n_tilde - occ + (n_tilde - c3);
  const double im = phi_phase + s3 - t * m2;
  return std::exp(std::complex<double>(re, im));
}

} // namespace qmag
