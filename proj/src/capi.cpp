#include "qmag/qmag.h"

#include "core/box_lattice.hpp"
#include "core/errors.hpp"
#include "core/field_profiles.hpp"
#include "core/observables_dynamic.hpp"
#include "core/observables_static.hpp"
#include "core/special_functions.hpp"
#include "core/units_scenarios.hpp"
#include "core/verification.hpp"

#include <algorithm>
#include <complex>
#include <cstdio>
#include <cstring>
#include <string>

struct qmag_model {
  qmag::DipoleCurrent current;
  qmag::Tolerance tol;
};

namespace {

thread_local std::string g_last_error;

qmag_status fail(qmag_status s, const char *msg) {
  g_last_error = msg;
  return s;
}

// translate the core exceptions into status codes
template <typename Fn> qmag_status guarded(Fn &&fn) {
  try {
    fn();
    return QMAG_OK;
  } catch (const qmag::RegimeError &e) {
    return fail(QMAG_ERR_REGIME, e.what());
  } catch (const qmag::DomainError &e) {
    return fail(QMAG_ERR_DOMAIN, e.what());
  } catch (const qmag::DivergenceError &e) {
    return fail(QMAG_ERR_DIVERGENCE, e.what());
  } catch (const qmag::InvalidCurrentError &e) {
    return fail(QMAG_ERR_CURRENT, e.what());
  } catch (const std::exception &e) {
    return fail(QMAG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QMAG_ERR_INTERNAL, "unknown error");
  }
}

bool bad(const void *p) { return p == nullptr; }

} // namespace

extern "C" {

const char *qmag_version(void) { return "0.1.0"; }

const char *qmag_status_name(qmag_status s) {
  switch (s) {
  case QMAG_OK:
    return "ok";
  case QMAG_ERR_ARGUMENT:
    return "invalid argument";
  case QMAG_ERR_DOMAIN:
    return "domain error";
  case QMAG_ERR_REGIME:
    return "regime error";
  case QMAG_ERR_DIVERGENCE:
    return "quadrature divergence";
  case QMAG_ERR_CURRENT:
    return "invalid current";
  case QMAG_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown";
}

const char *qmag_last_error(void) { return g_last_error.c_str(); }

qmag_status qmag_model_create(const double mu[3], double eps,
                              qmag_model **out) {
  if (bad(mu) || bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_model_create: null pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new qmag_model{qmag::DipoleCurrent({mu[0], mu[1], mu[2]}, eps),
                          qmag::Tolerance()};
  });
}

void qmag_model_free(qmag_model *m) { delete m; }

qmag_status qmag_model_set_tolerance(qmag_model *m, double rel, double abs) {
  if (bad(m))
    return fail(QMAG_ERR_ARGUMENT, "qmag_model_set_tolerance: null model");
  return guarded([&] { m->tol = qmag::Tolerance(rel, abs); });
}

/* ---- special functions --------------------------------------------- */

qmag_status qmag_erf(double x, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_erf: null output");
  return guarded([&] { *out = qmag::erf(x); });
}

qmag_status qmag_dawson(double x, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_dawson: null output");
  return guarded([&] { *out = qmag::dawson(x); });
}

qmag_status qmag_dawson_small(double x, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_dawson_small: null output");
  return guarded([&] { *out = qmag::dawson_small(x); });
}

qmag_status qmag_dawson_large(double x, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_dawson_large: null output");
  return guarded([&] { *out = qmag::dawson_large(x); });
}

qmag_status qmag_nascent_delta_1d(double x, double eps, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_nascent_delta_1d: null output");
  return guarded([&] { *out = qmag::nascent_delta_1d(x, eps); });
}

qmag_status qmag_nascent_delta_3d(double r, double eps, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_nascent_delta_3d: null output");
  return guarded([&] { *out = qmag::nascent_delta_3d(r, eps); });
}

/* ---- static observables --------------------------------------------- */

namespace {
void fill_static(qmag_static_report *out, const qmag::StaticReport &r) {
  out->energy = r.energy_tilde;
  out->sigma_energy = qmag::StaticReport::sigma_e_tilde();
  out->photons = r.photons_tilde;
  out->sigma_photons = r.sigma_n_tilde;
  out->h0 = r.h0_expect;
  out->h1 = r.h1_expect;
  out->log_overlap = -0.5 * r.photons_tilde;
  out->overlap = qmag::overlap_static_expanding(r.photons_tilde);
}
} // namespace

qmag_status qmag_static_report_closed(const qmag_model *m,
                                      qmag_static_report *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_static_report_closed: null pointer");
  return guarded(
      [&] { fill_static(out, qmag::static_report_dipole(m->current)); });
}

qmag_status qmag_static_report_quadrature(const qmag_model *m,
                                          qmag_static_report *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT,
                "qmag_static_report_quadrature: null pointer");
  return guarded([&] {
    const qmag::SpectralWeight w = qmag::dipole_spectral_weight(m->current);
    fill_static(out, qmag::static_report(w, m->tol));
  });
}

/* ---- dynamic observables --------------------------------------------- */

qmag_status qmag_dynamic_report_closed(const qmag_model *m, double t,
                                       qmag_dynamic_report *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_dynamic_report_closed: null pointer");
  return guarded([&] {
    out->t = t;
    out->h0 = qmag::free_field_energy_dipole(m->current, t);
    out->h1 = qmag::interaction_energy(out->h0);
    out->total_energy = 0.0;
    out->photons = qmag::photon_number_dipole(m->current, t);
    out->sigma_photons = qmag::sigma_photon(out->photons);
    const qmag::CumulantSet cu = qmag::cumulants_dipole(m->current);
    out->h2 = cu.h2;
    out->h3 = cu.h3;
    out->h4 = cu.h4;
    const qmag::EnergyStats st = qmag::energy_stats(cu);
    out->sigma_energy = st.sigma;
    out->skewness = st.skewness;
    out->excess_kurtosis = st.excess_kurtosis;
  });
}

qmag_status qmag_dynamic_report_quadrature(const qmag_model *m, double t,
                                           qmag_dynamic_report *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT,
                "qmag_dynamic_report_quadrature: null pointer");
  return guarded([&] {
    const qmag::SpectralWeight w = qmag::dipole_spectral_weight(m->current);
    const double e_tilde = qmag::static_energy(w, m->tol);
    const double n_tilde = qmag::static_photon_number(w, m->tol);
    out->t = t;
    out->h0 = qmag::free_field_energy(w, e_tilde, t, m->tol);
    out->h1 = qmag::interaction_energy(out->h0);
    out->total_energy = out->h0 + out->h1;
    out->photons = qmag::photon_number(w, n_tilde, t, m->tol);
    out->sigma_photons = qmag::sigma_photon(std::max(out->photons, 0.0));
    const qmag::CumulantSet cu = qmag::cumulants(w, 4, m->tol);
    out->h2 = cu.h2;
    out->h3 = cu.h3;
    out->h4 = cu.h4;
    const qmag::EnergyStats st = qmag::energy_stats(cu);
    out->sigma_energy = st.sigma;
    out->skewness = st.skewness;
    out->excess_kurtosis = st.excess_kurtosis;
  });
}

qmag_status qmag_photon_number_asymptotic(const qmag_model *m, double t,
                                          double *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT,
                "qmag_photon_number_asymptotic: null pointer");
  return guarded([&] {
    const double n_tilde = qmag::static_photon_number_dipole(m->current);
    *out = qmag::photon_number_asymptotic(n_tilde, m->current.eps, t);
  });
}

qmag_status qmag_survival_amplitude(const qmag_model *m, double s, double *re,
                                    double *im) {
  if (bad(m) || bad(re) || bad(im))
    return fail(QMAG_ERR_ARGUMENT, "qmag_survival_amplitude: null pointer");
  return guarded([&] {
    const qmag::SpectralWeight w = qmag::dipole_spectral_weight(m->current);
    const std::complex<double> f = qmag::survival_amplitude(w, s, m->tol);
    *re = f.real();
    *im = f.imag();
  });
}

/* ---- fields ----------------------------------------------------------- */

namespace {
void fill_coeffs(qmag_field_coeffs *out, const qmag::FieldCoeffs &f) {
  out->a = f.a;
  out->b_rad = f.b_rad;
  out->b_tan = f.b_tan;
  out->e = f.e;
}
} // namespace

qmag_status qmag_field_coeffs_static(const qmag_model *m, double r,
                                     qmag_field_coeffs *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_field_coeffs_static: null pointer");
  return guarded(
      [&] { fill_coeffs(out, qmag::static_field_coeffs(m->current, r)); });
}

qmag_status qmag_field_coeffs_expanding(const qmag_model *m, double t,
                                        double r, qmag_field_coeffs *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT,
                "qmag_field_coeffs_expanding: null pointer");
  return guarded([&] {
    fill_coeffs(out, qmag::expanding_field_coeffs(m->current, t, r));
  });
}

qmag_status qmag_fields_at(const qmag_model *m, double t, const double r[3],
                           double a[3], double b[3], double e[3]) {
  if (bad(m) || bad(r) || bad(a) || bad(b) || bad(e))
    return fail(QMAG_ERR_ARGUMENT, "qmag_fields_at: null pointer");
  return guarded([&] {
    const qmag::Vec3 pos{r[0], r[1], r[2]};
    qmag::Vec3 av, bv, ev;
    if (t < 0.0) { // static evaluator; the electric field vanishes
      av = qmag::static_vector_field(m->current, pos);
      bv = qmag::static_magnetic_field(m->current, pos);
      ev = {};
    } else {
      av = qmag::expanding_vector_field(m->current, t, pos);
      bv = qmag::expanding_magnetic_field(m->current, t, pos);
      ev = qmag::expanding_electric_field(m->current, t, pos);
    }
    a[0] = av.x;
    a[1] = av.y;
    a[2] = av.z;
    b[0] = bv.x;
    b[1] = bv.y;
    b[2] = bv.z;
    e[0] = ev.x;
    e[1] = ev.y;
    e[2] = ev.z;
  });
}

qmag_status qmag_locate_front(const qmag_model *m, double t, double *r_front,
                              double *width) {
  if (bad(m) || bad(r_front) || bad(width))
    return fail(QMAG_ERR_ARGUMENT, "qmag_locate_front: null pointer");
  return guarded([&] {
    const qmag::FrontInfo info = qmag::locate_front(m->current, t);
    *r_front = info.r_front;
    *width = info.width;
  });
}

qmag_status qmag_energy_in_shell(const qmag_model *m, double t, double r_lo,
                                 double r_hi, double *out) {
  if (bad(m) || bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_energy_in_shell: null pointer");
  return guarded(
      [&] { *out = qmag::energy_localization(m->current, t, r_lo, r_hi); });
}

/* ---- scenarios --------------------------------------------------------- */

qmag_status qmag_scenario_preset(const char *name, double *beta,
                                 double *eps_si, int *energy_unit) {
  if (bad(name) || bad(beta) || bad(eps_si) || bad(energy_unit))
    return fail(QMAG_ERR_ARGUMENT, "qmag_scenario_preset: null pointer");
  qmag::Scenario s;
  if (std::strcmp(name, "microscopic") == 0)
    s = qmag::microscopic_scenario();
  else if (std::strcmp(name, "macroscopic") == 0)
    s = qmag::macroscopic_scenario();
  else
    return fail(QMAG_ERR_ARGUMENT, "qmag_scenario_preset: unknown scenario");
  *beta = s.beta;
  *eps_si = s.eps_si;
  *energy_unit = (s.unit == qmag::EnergyUnit::joule) ? 1 : 0;
  return QMAG_OK;
}

qmag_status qmag_scenario_report_get(double beta, double eps_si,
                                     int energy_unit, int paper_precision,
                                     qmag_scenario_report *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_scenario_report_get: null pointer");
  return guarded([&] {
    qmag::Scenario s;
    s.name = "custom";
    s.beta = beta;
    s.eps_si = eps_si;
    s.unit = energy_unit ? qmag::EnergyUnit::joule
                         : qmag::EnergyUnit::electron_rest;
    const qmag::PhysicalConstants pc =
        paper_precision ? qmag::PhysicalConstants::paper_precision()
                        : qmag::PhysicalConstants{};
    const qmag::ScenarioReport rep = qmag::scenario_report(s, pc);
    out->mu_over_eps = rep.mu_over_eps;
    out->energy_static = rep.energy_static;
    out->sigma_e_static = rep.sigma_e_static;
    out->photons_static = rep.photons_static;
    out->sigma_n_static = rep.sigma_n_static;
    out->energy_expanding = rep.energy_expanding;
    out->sigma_e_expanding = rep.sigma_e_expanding;
    out->photons_expanding = rep.photons_expanding;
    out->sigma_n_expanding = rep.sigma_n_expanding;
    out->overlap = rep.overlap;
    out->log_overlap = rep.log_overlap;
  });
}

qmag_status qmag_iron_ball_beta(double radius_m, double *out) {
  if (bad(out))
    return fail(QMAG_ERR_ARGUMENT, "qmag_iron_ball_beta: null pointer");
  return guarded([&] {
    // density and saturation magnetisation of iron at room temperature
    *out = qmag::iron_ball_beta(radius_m, 7874.0, 217.6,
                                qmag::PhysicalConstants{});
  });
}

/* ---- verification ------------------------------------------------------ */

qmag_status qmag_verify_run(const qmag_model *m, const char *only,
                            int include_lattice, qmag_check_result *results,
                            size_t cap, size_t *n_out, int *all_passed) {
  if (bad(m) || bad(n_out) || bad(all_passed) || (cap > 0 && bad(results)))
    return fail(QMAG_ERR_ARGUMENT, "qmag_verify_run: null pointer");
  return guarded([&] {
    qmag::VerifyOptions opts;
    opts.tol = m->tol;
    opts.only = only ? only : "";
    opts.include_lattice = include_lattice != 0;
    const std::vector<qmag::CheckResult> res =
        qmag::run_verification(m->current, opts);
    *n_out = res.size();
    *all_passed = 1;
    for (size_t i = 0; i < res.size(); ++i) {
      if (!res[i].passed)
        *all_passed = 0;
      if (i < cap) {
        std::snprintf(results[i].name, sizeof(results[i].name), "%s",
                      res[i].name.c_str());
        results[i].passed = res[i].passed ? 1 : 0;
        results[i].converged = res[i].converged ? 1 : 0;
        results[i].observed = res[i].observed;
        results[i].threshold = res[i].threshold;
        std::snprintf(results[i].detail, sizeof(results[i].detail), "%s",
                      res[i].detail.c_str());
      }
    }
  });
}

qmag_status qmag_lattice_convergence(const qmag_model *m,
                                     const double *box_lengths, size_t n,
                                     double cutoff, double *lattice_values,
                                     double *continuum_value) {
  if (bad(m) || bad(box_lengths) || bad(lattice_values) ||
      bad(continuum_value))
    return fail(QMAG_ERR_ARGUMENT, "qmag_lattice_convergence: null pointer");
  return guarded([&] {
    *continuum_value = qmag::static_photon_number_dipole(m->current);
    for (size_t i = 0; i < n; ++i) {
      const qmag::BoxSpec spec(box_lengths[i], cutoff);
      lattice_values[i] =
          qmag::lattice_sum(spec, m->current, qmag::LatticeTarget::photons);
    }
  });
}

} /* extern "C" */
