/* qmag -- quantum magnetostatic and causally expanding dipole-field
 * observables.
 *
 * C API over the C++ core: opaque handles, integer status codes, output
 * through pointers.  All functions are thread-safe; the model handle is
 * immutable after creation except for qmag_model_set_tolerance, which must
 * not race with concurrent use of the same handle.
 *
 * Units are natural (hbar = c = 1): lengths and times share one unit,
 * energies are inverse lengths, the magnetic moment mu carries length.
 */
#ifndef QMAG_H
#define QMAG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmag_status {
  QMAG_OK = 0,
  QMAG_ERR_ARGUMENT = 1,   /* bad pointer / malformed argument */
  QMAG_ERR_DOMAIN = 2,     /* input outside the mathematical domain */
  QMAG_ERR_REGIME = 3,     /* outside the validity regime of the method */
  QMAG_ERR_DIVERGENCE = 4, /* quadrature failed to converge */
  QMAG_ERR_CURRENT = 5,    /* current violates transversality */
  QMAG_ERR_INTERNAL = 6
} qmag_status;

/* Gaussian-smeared magnetic dipole + tolerance settings. */
typedef struct qmag_model qmag_model;

const char *qmag_version(void);
const char *qmag_status_name(qmag_status s);
/* thread-local message for the last error raised on this thread */
const char *qmag_last_error(void);

qmag_status qmag_model_create(const double mu[3], double eps,
                              qmag_model **out);
void qmag_model_free(qmag_model *m);
qmag_status qmag_model_set_tolerance(qmag_model *m, double rel, double abs);

/* ---- special functions --------------------------------------------- */
qmag_status qmag_erf(double x, double *out);
qmag_status qmag_dawson(double x, double *out);
qmag_status qmag_dawson_small(double x, double *out); /* |x| <= 0.1 */
qmag_status qmag_dawson_large(double x, double *out); /* |x| >= 10  */
qmag_status qmag_nascent_delta_1d(double x, double eps, double *out);
qmag_status qmag_nascent_delta_3d(double r, double eps, double *out);

/* ---- static (ground-state) observables ------------------------------ */
typedef struct qmag_static_report {
  double energy;        /* ground-state energy, < 0 */
  double sigma_energy;  /* identically 0 */
  double photons;       /* Ntilde */
  double sigma_photons; /* sqrt(Ntilde) */
  double h0;            /* free-field part, -energy */
  double h1;            /* interaction part, 2 energy */
  double overlap;       /* static/expanding overlap exp(-Ntilde/2) */
  double log_overlap;
} qmag_static_report;

/* closed forms (exact for the dipole) */
qmag_status qmag_static_report_closed(const qmag_model *m,
                                      qmag_static_report *out);
/* same numbers via quadrature of the spectral weight (oracle route) */
qmag_status qmag_static_report_quadrature(const qmag_model *m,
                                          qmag_static_report *out);

/* ---- expanding-state observables at one time ------------------------ */
typedef struct qmag_dynamic_report {
  double t;
  double h0;           /* free-field energy, -> -2 E as t -> inf */
  double h1;           /* interaction energy, -h0 */
  double total_energy; /* identically 0 */
  double photons;      /* N(t), -> 2 Ntilde */
  double sigma_photons;
  double h2, h3, h4;   /* Hamiltonian cumulants (time independent) */
  double sigma_energy; /* sqrt(h2) */
  double skewness;
  double excess_kurtosis;
} qmag_dynamic_report;

qmag_status qmag_dynamic_report_closed(const qmag_model *m, double t,
                                       qmag_dynamic_report *out);
qmag_status qmag_dynamic_report_quadrature(const qmag_model *m, double t,
                                           qmag_dynamic_report *out);

/* algebraic late-time tail 2N(1 + (eps/t)^2); needs t >= 10 eps */
qmag_status qmag_photon_number_asymptotic(const qmag_model *m, double t,
                                          double *out);
/* survival amplitude F(s) = <psi(t)|psi(t+s)> */
qmag_status qmag_survival_amplitude(const qmag_model *m, double s,
                                    double *re, double *im);

/* ---- mean fields ----------------------------------------------------- */
/* scalar coefficients in A = a (mu x rhat), B = b_tan mu + b_rad
 * (mu.rhat) rhat, E = e (mu x rhat) */
typedef struct qmag_field_coeffs {
  double a;
  double b_rad;
  double b_tan;
  double e;
} qmag_field_coeffs;

qmag_status qmag_field_coeffs_static(const qmag_model *m, double r,
                                     qmag_field_coeffs *out);
qmag_status qmag_field_coeffs_expanding(const qmag_model *m, double t,
                                        double r, qmag_field_coeffs *out);
/* full vectors at a position (expanding: pass t >= 0; static: t < 0) */
qmag_status qmag_fields_at(const qmag_model *m, double t, const double r[3],
                           double a[3], double b[3], double e[3]);
/* |E| pulse position and full width at half maximum (needs t >= 5 eps) */
qmag_status qmag_locate_front(const qmag_model *m, double t, double *r_front,
                              double *width);
/* mean-field energy excess over the static background in a radial shell
 * (needs t >= 10 eps) */
qmag_status qmag_energy_in_shell(const qmag_model *m, double t, double r_lo,
                                 double r_hi, double *out);

/* ---- SI scenarios ----------------------------------------------------- */
typedef struct qmag_scenario_report {
  double mu_over_eps;
  double energy_static; /* in the scenario's energy unit */
  double sigma_e_static;
  double photons_static;
  double sigma_n_static;
  double energy_expanding;
  double sigma_e_expanding;
  double photons_expanding;
  double sigma_n_expanding;
  double overlap;
  double log_overlap;
} qmag_scenario_report;

/* preset lookup: name in {"microscopic", "macroscopic"}; energy_unit is
 * 0 = electron rest energies, 1 = joules */
qmag_status qmag_scenario_preset(const char *name, double *beta,
                                 double *eps_si, int *energy_unit);
/* paper_precision != 0 selects the rounded constants (alpha = 1/137,
 * lambda_C = 2.4e-12 m) */
qmag_status qmag_scenario_report_get(double beta, double eps_si,
                                     int energy_unit, int paper_precision,
                                     qmag_scenario_report *out);
/* beta of a maximally magnetised iron ball of the given radius */
qmag_status qmag_iron_ball_beta(double radius_m, double *out);

/* ---- verification ----------------------------------------------------- */
typedef struct qmag_check_result {
  char name[48];
  int passed;
  int converged;
  double observed;
  double threshold;
  char detail[480];
} qmag_check_result;

/* Run the oracle/closed-form/lattice suite.  `only` (may be NULL) keeps
 * checks whose name contains the substring; include_lattice = 0 skips the
 * box-sum study.  Returns up to `cap` results and the total count. */
qmag_status qmag_verify_run(const qmag_model *m, const char *only,
                            int include_lattice, qmag_check_result *results,
                            size_t cap, size_t *n_out, int *all_passed);

/* Lattice convergence rows (photon-number target) for box lengths L and
 * momentum cutoff; arrays of length n. */
qmag_status qmag_lattice_convergence(const qmag_model *m,
                                     const double *box_lengths, size_t n,
                                     double cutoff, double *lattice_values,
                                     double *continuum_value);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QMAG_H */
