#include "verification.hpp"

#include "box_lattice.hpp"
#include "field_profiles.hpp"
#include "observables_dynamic.hpp"
#include "observables_static.hpp"
#include "oracles.hpp"
#include "special_functions.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace qmag {

namespace {

constexpr double kPi = 3.14159265358979323846;

// deterministic uniform stream, independent of library distributions
struct Uniform {
  std::mt19937_64 rng;
  explicit Uniform(std::uint64_t seed) : rng(seed) {}
  double operator()() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  }
  double in(double lo, double hi) { return lo + (hi - lo) * (*this)(); }
};

std::string fmt(const char *f, ...) {
  char buf[256];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

double rel_diff(double a, double b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

struct Harness {
  const DipoleCurrent &c;
  Tolerance tol; // propagated from VerifyOptions into the slow quadratures
  std::vector<CheckResult> results;

  void add(const std::string &name, double observed, double threshold,
           bool converged, const std::string &detail) {
    results.push_back({name, observed <= threshold && converged, converged,
                       observed, threshold, detail});
  }
};

// ---- individual checks ---------------------------------------------------

void check_special_functions(Harness &h) {
  double worst = 0.0;
  bool conv = true;
  // dawson vs its defining integral on a log grid; the integral is
  // computed on the inner variable u = x - y where it decays from 1
  for (int i = 0; i <= 24; ++i) {
    const double x = std::pow(10.0, -3.0 + 6.0 * i / 24.0);
    const double cap = std::min(x, 40.0 / (2.0 * x) + 2.0);
    QuadResult q = integrate_interval(
        [x](double u) { return std::exp(-u * (2.0 * x - u)); }, 0.0, cap,
        Tolerance(1e-13, 1e-300));
    conv = conv && q.converged;
    worst = std::max(worst, rel_diff(dawson(x), q.value, 1e-30));
  }
  // erf vs its defining integral
  for (double x : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    QuadResult q = integrate_interval(
        [](double y) { return std::exp(-y * y); }, 0.0, x,
        Tolerance(1e-14, 1e-300));
    conv = conv && q.converged;
    worst = std::max(worst,
                     rel_diff(erf(x), 2.0 / std::sqrt(kPi) * q.value, 1e-30));
  }
  h.add("special-functions", worst, 2e-12, conv,
        "erf and dawson vs adaptive quadrature of their definitions");
}

void check_dawson_ode(Harness &h) {
  // d/dx daw + 2 x daw = 1, centred differences
  double worst = 0.0;
  for (double x : {0.05, 0.3, 0.9, 1.1, 2.0, 5.0, 9.0, 11.9, 12.1, 40.0}) {
    const double step = 1e-5 * std::max(1.0, x);
    const double d = (dawson(x + step) - dawson(x - step)) / (2.0 * step);
    worst = std::max(worst, std::abs(d + 2.0 * x * dawson(x) - 1.0));
  }
  h.add("dawson-ode", worst, 1e-8, true,
        "d/dx daw + 2x daw = 1 by centred differences");
}

void check_nascent_deltas(Harness &h) {
  double worst = 0.0;
  bool conv = true;
  for (double eps : {1e-3, 1.0, 1e3}) {
    QuadResult q1 = integrate_interval(
        [eps](double x) { return nascent_delta_1d(x, eps); }, -10.0 * eps,
        10.0 * eps, Tolerance(1e-13, 1e-300));
    QuadResult q3 = integrate_interval(
        [eps](double r) {
          return 4.0 * kPi * r * r * nascent_delta_3d(r, eps);
        },
        0.0, 10.0 * eps, Tolerance(1e-13, 1e-300));
    conv = conv && q1.converged && q3.converged;
    worst = std::max({worst, std::abs(q1.value - 1.0),
                      std::abs(q3.value - 1.0)});
  }
  h.add("nascent-deltas", worst, 1e-10, conv,
        "1d and 3d nascent deltas integrate to 1 for eps in [1e-3, 1e3]");
}

// the four radial integral families vs their closed forms
void check_oracle_families(Harness &h) {
  Uniform u(0x5eed0001u);
  const Tolerance tol(1e-12, 1e-300);
  const DecayInfo half_gauss{DecayClass::gaussian, 1.0, 0.0};
  const DecayInfo quarter_gauss{DecayClass::gaussian, std::sqrt(2.0), 0.0};
  double worst = 0.0;
  bool conv = true;
  std::ostringstream table;
  table << "    family       a        closed            oracle            reldiff\n";

  for (int i = 0; i < 50; ++i) {
    const double a = u.in(0.0, 100.0);
    // family I: Int exp(-x^2/4) sin(ax)/x = (pi/2) erf(a)
    {
      QuadResult q = integrate_oscillatory(
          [](double x) { return std::exp(-x * x / 4.0) / x; }, a,
          OscKind::sine, quarter_gauss, tol);
      const double closed = 0.5 * kPi * erf(a);
      const double d = rel_diff(closed, q.value, 1e-6 * kPi);
      conv = conv && q.converged;
      worst = std::max(worst, d);
      if (i < 4)
        table << fmt("    I        %8.3f  %.10e  %.10e  %.2e\n", a, closed,
                     q.value, d);
    }
    // family I1 piece: Int exp(-x^2/4) cos(ax) = sqrt(pi) exp(-a^2)
    {
      QuadResult q = integrate_oscillatory(
          [](double x) { return std::exp(-x * x / 4.0); }, a, OscKind::cosine,
          quarter_gauss, tol);
      const double closed = std::sqrt(kPi) * std::exp(-a * a);
      const double d = rel_diff(closed, q.value, 1e-6 * std::sqrt(kPi));
      conv = conv && q.converged;
      worst = std::max(worst, d);
      if (i < 4)
        table << fmt("    I1       %8.3f  %.10e  %.10e  %.2e\n", a, closed,
                     q.value, d);
    }
    // family I2: Int x^2 exp(-x^2/2) cos(ax) = sqrt(pi/2)(1-a^2)exp(-a^2/2)
    {
      QuadResult q = integrate_oscillatory(
          [](double x) { return x * x * std::exp(-x * x / 2.0); }, a,
          OscKind::cosine, half_gauss, tol);
      const double closed =
          std::sqrt(kPi / 2.0) * (1.0 - a * a) * std::exp(-a * a / 2.0);
      const double d = rel_diff(closed, q.value, 1e-6 * std::sqrt(kPi / 2.0));
      conv = conv && q.converged;
      worst = std::max(worst, d);
      if (i < 4)
        table << fmt("    I2       %8.3f  %.10e  %.10e  %.2e\n", a, closed,
                     q.value, d);
    }
    // family I3: Int x exp(-x^2/2) cos(ax) = 1 - sqrt(2) a daw(a/sqrt(2))
    {
      QuadResult q = integrate_oscillatory(
          [](double x) { return x * std::exp(-x * x / 2.0); }, a,
          OscKind::cosine, half_gauss, tol);
      const double closed = 1.0 - std::sqrt(2.0) * a * dawson(a / std::sqrt(2.0));
      const double d = rel_diff(closed, q.value, 1e-6);
      conv = conv && q.converged;
      worst = std::max(worst, d);
      if (i < 4)
        table << fmt("    I3       %8.3f  %.10e  %.10e  %.2e\n", a, closed,
                     q.value, d);
    }
  }
  h.add("oracle-families", worst, 1e-8, conv,
        "four radial families, 50 random a in [0,100] (floor 1e-6 x scale), "
        "sample rows:\n" + table.str());
}

void check_static_oracle(Harness &h) {
  double worst = 0.0;
  bool conv = true;
  for (double mu : {1e-3, 1.0, 1e3}) {
    for (double eps : {1e-3, 1.0, 1e3}) {
      const DipoleCurrent d({0.0, 0.0, mu}, eps);
      const SpectralWeight w = dipole_spectral_weight(d);
      const QuadResult e = weight_moment(w, -2, h.tol);
      const QuadResult n = weight_moment(w, -3, h.tol);
      conv = conv && e.converged && n.converged;
      worst = std::max(worst,
                       rel_diff(static_energy_dipole(d), -e.value, 1e-300));
      worst = std::max(
          worst, rel_diff(static_photon_number_dipole(d), n.value, 1e-300));
    }
  }
  h.add("static-oracle", worst, 1e-10, conv,
        "ground-state energy and photon number: closed form vs quadrature "
        "across mu, eps in [1e-3, 1e3]");
}

void check_dynamic_oracle(Harness &h) {
  Uniform u(0x5eed0002u);
  const SpectralWeight w = dipole_spectral_weight(h.c);
  const double e_tilde = static_energy_dipole(h.c);
  const double n_tilde = static_photon_number_dipole(h.c);
  const Tolerance tol = h.tol;
  double worst = 0.0;
  bool conv = true;
  for (int i = 0; i < 25; ++i) {
    const double t = u.in(0.0, 20.0) * h.c.eps;
    const double h0_closed = free_field_energy_dipole(h.c, t);
    const QuadResult osc = weight_cosine_moment(w, 2, t, tol);
    conv = conv && osc.converged;
    worst = std::max(worst, rel_diff(h0_closed,
                                     -2.0 * e_tilde - 2.0 * osc.value,
                                     2e-6 * std::abs(e_tilde)));
    const double n_closed = photon_number_dipole(h.c, t);
    const QuadResult osc3 = weight_cosine_moment(w, 3, t, tol);
    conv = conv && osc3.converged;
    worst = std::max(worst, rel_diff(n_closed,
                                     2.0 * n_tilde - 2.0 * osc3.value,
                                     2e-6 * n_tilde));
  }
  for (int n = 2; n <= 4; ++n) {
    const QuadResult q = weight_moment(w, n - 3, tol);
    conv = conv && q.converged;
    worst = std::max(worst,
                     rel_diff(cumulant_dipole(h.c, n), q.value, 1e-300));
  }
  h.add("dynamic-oracle", worst, 1e-8, conv,
        "free-field energy, photon number, cumulants: closed forms vs "
        "weight quadrature at 25 random times");
}

void check_field_oracle(Harness &h) {
  Uniform u(0x5eed0003u);
  const Tolerance tol(1e-11, 1e-300);
  double worst = 0.0;
  bool conv = true;
  // ~1e-6 of the coefficient peak; ahead-of-front values sink below it
  const double floor = 3e-8 / (h.c.eps * h.c.eps);
  for (int i = 0; i < 20; ++i) {
    const double r = u.in(0.05, 25.0) * h.c.eps;
    const QuadResult q = vector_coeff_static_oracle(h.c, r, tol);
    conv = conv && q.converged;
    worst = std::max(
        worst, rel_diff(static_field_coeffs(h.c, r).a, q.value, floor));
  }
  for (int i = 0; i < 50; ++i) {
    const double t = u.in(0.05, 20.0) * h.c.eps;
    const double r = u.in(0.05, 25.0) * h.c.eps;
    const QuadResult q = vector_coeff_expanding_oracle(h.c, t, r, tol);
    conv = conv && q.converged;
    worst = std::max(
        worst, rel_diff(expanding_field_coeffs(h.c, t, r).a, q.value, floor));
  }
  h.add("field-oracle", worst, 1e-8, conv,
        "vector-potential coefficient vs momentum-space quadrature, static "
        "(20 radii) and expanding (50 random (t, r))");
}

void check_mc_fourier(Harness &h) {
  const double r = 2.0 * h.c.eps;
  const MonteCarloResult mc = vector_coeff_static_mc(h.c, r);
  const double closed = static_field_coeffs(h.c, r).a;
  const double d = std::abs(mc.value - closed) / std::abs(closed);
  h.add("mc-fourier", d, std::max(1e-3, 4.0 * mc.std_error / std::abs(closed)),
        true,
        fmt("3d Monte Carlo of the defining integral at r = 2 eps: "
            "mc = %.6e +- %.1e, closed = %.6e, seed = %llu, n = %ld",
            mc.value, mc.std_error, closed,
            static_cast<unsigned long long>(mc.seed), mc.samples));
}

void check_energy_conservation(Harness &h) {
  Uniform u(0x5eed0004u);
  const SpectralWeight w = dipole_spectral_weight(h.c);
  const double e_tilde = static_energy_dipole(h.c);
  const double scale = 2.0 * std::abs(e_tilde);
  double worst = 0.0;
  bool conv = true;
  for (int i = 0; i < 100; ++i) {
    const double t = u.in(0.0, 50.0) * h.c.eps;
    // oracle route for <H0>, closed route for <H1> = -<H0>
    double h0;
    try {
      h0 = free_field_energy(w, e_tilde, t, Tolerance(1e-12, 1e-300));
    } catch (const DivergenceError &) {
      conv = false;
      continue;
    }
    const double h1 = interaction_energy(free_field_energy_dipole(h.c, t));
    worst = std::max(worst, std::abs(h0 + h1) / scale);
  }
  h.add("energy-conservation", worst, 1e-9, conv,
        "<H0>(t) by quadrature plus <H1>(t) from the closed form vanishes "
        "at 100 random times (scale 2|E|)");
}

void check_overlap(Harness &h) {
  const SpectralWeight w = dipole_spectral_weight(h.c);
  const double n_tilde = static_photon_number_dipole(h.c);
  const double expected = overlap_static_expanding(n_tilde);
  double worst = 0.0;
  for (double f : {0.1, 1.0, 10.0}) {
    const std::complex<double> o =
        overlap_via_modes(w, f * h.c.eps, Tolerance(1e-13, 1e-300));
    worst = std::max(worst, std::abs(o - expected) / expected);
  }
  h.add("overlap-time-independence", worst, 1e-10, true,
        "mode-machinery overlap at t/eps in {0.1, 1, 10} equals exp(-N/2)");
}

void check_survival_moments(Harness &h) {
  const SpectralWeight w = dipole_spectral_weight(h.c);
  const auto m = survival_moments(w, h.c.eps);
  const CumulantSet cu = cumulants_dipole(h.c);
  const double m4_expected = cu.h4 + 3.0 * cu.h2 * cu.h2;
  double worst = std::abs(m[0]) / std::sqrt(cu.h2); // <H> vs sigma scale
  worst = std::max(worst, std::abs(m[1] - cu.h2) / cu.h2);
  worst = std::max(worst, std::abs(m[2] - cu.h3) / cu.h3);
  worst = std::max(worst, std::abs(m[3] - m4_expected) / m4_expected);
  h.add("survival-moments", worst, 1e-5, true,
        fmt("finite differences of F(s): <H> = %.2e, <H^2>/<h2>-1 = %.2e, "
            "<H^3>/h3-1 = %.2e, <H^4>/(h4+3h2^2)-1 = %.2e",
            m[0], m[1] / cu.h2 - 1.0, m[2] / cu.h3 - 1.0,
            m[3] / m4_expected - 1.0));
}

void check_photon_consistency(Harness &h) {
  Uniform u(0x5eed0005u);
  const double n_tilde = static_photon_number_dipole(h.c);
  double worst_var = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = u.in(0.0, 30.0) * h.c.eps;
    const double n = photon_number_dipole(h.c, t);
    const double s = sigma_photon(n);
    worst_var = std::max(worst_var, std::abs(s * s - n) / std::max(n, 1e-30));
  }
  const double late = std::abs(
      photon_number_dipole(h.c, 1000.0 * h.c.eps) / (2.0 * n_tilde) - 1.0);
  const double tail =
      std::abs(photon_number_asymptotic(n_tilde, h.c.eps, 100.0 * h.c.eps) /
                   photon_number_dipole(h.c, 100.0 * h.c.eps) -
               1.0);
  // normalised worst ratio against the three separate thresholds
  const double worst =
      std::max({worst_var / 1e-14, late / 1e-4, tail / 1e-3});
  h.add("photon-consistency", worst, 1.0, true,
        fmt("sigma_N^2 = N at 50 times (%.2e vs 1e-14); N(1000 eps)/2N - 1 "
            "= %.2e (vs 1e-4); asymptote mismatch at 100 eps = %.2e (vs 1e-3)",
            worst_var, late, tail));
}

void check_riemann_lebesgue(Harness &h) {
  const SpectralWeight w = dipole_spectral_weight(h.c);
  double worst_tail = 0.0;
  double monotone_violation = 0.0;
  for (int p : {2, 3}) {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i)
      grid.push_back((500.0 + 50.0 * i) * h.c.eps);
    const DecayReport rep =
        riemann_lebesgue_check(w, p, grid, Tolerance(1e-12, 1e-300));
    worst_tail = std::max(worst_tail,
                          rep.max_tail / std::abs(rep.value_at_zero));
    // envelope decay beyond t = 5 eps
    std::vector<double> early;
    for (int i = 0; i <= 20; ++i)
      early.push_back((5.0 + i) * h.c.eps);
    const DecayReport er =
        riemann_lebesgue_check(w, p, early, Tolerance(1e-12, 1e-300));
    for (size_t i = 1; i < er.value.size(); ++i) {
      const double growth = std::abs(er.value[i]) - std::abs(er.value[i - 1]);
      monotone_violation = std::max(
          monotone_violation, growth / std::abs(rep.value_at_zero));
    }
  }
  const double worst = std::max(worst_tail / 1e-6, monotone_violation / 1e-12);
  h.add("riemann-lebesgue", worst, 1.0, true,
        fmt("cosine integrals at t = 1e3 eps: %.2e of the t = 0 value "
            "(vs 1e-6); envelope growth beyond 5 eps: %.2e (vs 1e-12)",
            worst_tail, monotone_violation));
}

void check_field_consistency(Harness &h) {
  Uniform u(0x5eed0006u);
  const double eps = h.c.eps;
  const double t = 10.0 * eps;
  double worst_curl = 0.0, worst_e = 0.0, worst_div = 0.0;
  const double step = 1e-4 * eps;

  auto a_field = [&](const Vec3 &r) {
    return expanding_vector_field(h.c, t, r);
  };

  for (int i = 0; i < 100; ++i) {
    // bias samples toward the front where the derivatives are hardest
    const double rr = (i % 3 == 0) ? u.in(9.0, 11.0) * eps
                                   : u.in(0.5, 14.0) * eps;
    const double ct = u.in(-0.99, 0.99);
    const double st = std::sqrt(1.0 - ct * ct);
    const double ph = u.in(0.0, 2.0 * kPi);
    const Vec3 r{rr * st * std::cos(ph), rr * st * std::sin(ph), rr * ct};

    // curl by central differences
    auto d = [&](int comp, int axis) {
      Vec3 dr{};
      (axis == 0 ? dr.x : axis == 1 ? dr.y : dr.z) = step;
      const Vec3 p = a_field(r + dr), m = a_field(r - dr);
      const double pv = comp == 0 ? p.x : comp == 1 ? p.y : p.z;
      const double mv = comp == 0 ? m.x : comp == 1 ? m.y : m.z;
      return (pv - mv) / (2.0 * step);
    };
    const Vec3 curl_num{d(2, 1) - d(1, 2), d(0, 2) - d(2, 0),
                        d(1, 0) - d(0, 1)};
    const Vec3 b = expanding_magnetic_field(h.c, t, r);
    const double bscale = std::max(norm(b), 1e-8 * h.c.mu_mag() / (eps * eps * eps));
    worst_curl = std::max(worst_curl, norm(curl_num - b) / bscale);

    // E = -dA/dt
    const Vec3 ep = expanding_vector_field(h.c, t + step, r);
    const Vec3 em = expanding_vector_field(h.c, t - step, r);
    const Vec3 e_num = (em - ep) / (2.0 * step);
    const Vec3 e = expanding_electric_field(h.c, t, r);
    const double escale =
        std::max({norm(e), norm(e_num), 1e-8 * h.c.mu_mag() / (eps * eps * eps)});
    worst_e = std::max(worst_e, norm(e_num - e) / escale);

    // Coulomb gauge: div A = 0
    auto a_comp = [&](const Vec3 &rr2, int comp) {
      const Vec3 v = a_field(rr2);
      return comp == 0 ? v.x : comp == 1 ? v.y : v.z;
    };
    double div = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      Vec3 dr{};
      (axis == 0 ? dr.x : axis == 1 ? dr.y : dr.z) = step;
      div += (a_comp(r + dr, axis) - a_comp(r - dr, axis)) / (2.0 * step);
    }
    const double ascale = std::max(norm(a_field(r)), 1e-8 * h.c.mu_mag() / (eps * eps));
    worst_div = std::max(worst_div, std::abs(div) * eps / ascale);
  }
  const double worst = std::max({worst_curl / 1e-4, worst_e / 1e-4,
                                 worst_div / 1e-6});
  h.add("field-consistency", worst, 1.0, true,
        fmt("B = curl A (%.2e vs 1e-4), E = -dA/dt (%.2e vs 1e-4), "
            "div A (%.2e vs 1e-6), 100 random points incl. the front",
            worst_curl, worst_e, worst_div));
}

void check_front_localization(Harness &h) {
  const double eps = h.c.eps;
  const FrontInfo f10 = locate_front(h.c, 10.0 * eps);
  const FrontInfo f100 = locate_front(h.c, 100.0 * eps);
  const double e_tilde = static_energy_dipole(h.c);

  const double shell20 =
      energy_localization(h.c, 20.0 * eps, 15.0 * eps, 25.0 * eps);
  const double shell40 =
      energy_localization(h.c, 40.0 * eps, 35.0 * eps, 45.0 * eps);
  const double behind =
      energy_localization(h.c, 20.0 * eps, 1e-3 * eps, 10.0 * eps);

  const double frac20 = shell20 / std::abs(e_tilde);
  const double frac40 = shell40 / std::abs(e_tilde);
  bool ok = f10.r_front >= 9.0 * eps && f10.r_front <= 11.0 * eps;
  ok = ok && std::abs(f100.r_front / (100.0 * eps) - 1.0) <= 0.02;
  ok = ok && f10.width > 0.2 * eps && f10.width < 3.0 * eps;
  ok = ok && frac20 >= 0.90 && std::abs(frac40 - frac20) <= 0.05 * frac20;
  ok = ok && std::abs(behind) <= 0.05 * std::abs(e_tilde);
  h.add("front-localization", ok ? 0.0 : 1.0, 0.5, true,
        fmt("r_front(10 eps) = %.3f eps, width = %.3f eps; shell [t-5,t+5] "
            "holds %.4f |E| at t = 20 eps (%.4f at 40 eps); behind-front "
            "shell %.2e |E|",
            f10.r_front / eps, f10.width / eps, frac20, frac40,
            std::abs(behind / e_tilde)));
}

void check_lattice(Harness &h) {
  const double eps = h.c.eps;
  const double cutoff = 8.0 / eps;
  const double n_cont = static_photon_number_dipole(h.c);
  const double e_cont = static_energy_dipole(h.c);
  const double h2_cont = cumulant_dipole(h.c, 2);

  const std::vector<double> ls = {20.0 * eps, 40.0 * eps, 80.0 * eps};
  std::vector<double> nv, ev, hv;
  for (double L : ls) {
    const BoxSpec spec(L, cutoff);
    nv.push_back(lattice_sum(spec, h.c, LatticeTarget::photons));
    ev.push_back(lattice_sum(spec, h.c, LatticeTarget::energy));
    LatticeOptions lo;
    lo.cumulant_n = 2;
    hv.push_back(lattice_sum(spec, h.c, LatticeTarget::cumulant, lo));
  }
  const double rel40_n = std::abs(nv[1] / n_cont - 1.0);
  const double rel40_e = std::abs(ev[1] / e_cont - 1.0);
  const double rel40_h = std::abs(hv[1] / h2_cont - 1.0);

  // two-stage Richardson in 1/L^2 then 1/L^3
  auto extrapolate = [](const std::vector<double> &v) {
    const double r1 = richardson_pair(v[0], v[1], 2);
    const double r2 = richardson_pair(v[1], v[2], 2);
    return richardson_pair(r1, r2, 3);
  };
  const double rn = std::abs(extrapolate(nv) / n_cont - 1.0);
  const double re = std::abs(extrapolate(ev) / e_cont - 1.0);
  const double rh = std::abs(extrapolate(hv) / h2_cont - 1.0);

  const double worst40 = std::max({rel40_n, rel40_e, rel40_h});
  const double worst_extrap = std::max({rn, re, rh});
  h.add("lattice-convergence",
        std::max(worst40 / 0.01, worst_extrap / 1e-4), 1.0, true,
        fmt("L = 40 eps rel errs: N %.2e, E %.2e, h2 %.2e (vs 1e-2); "
            "Richardson over {20,40,80} eps: %.2e, %.2e, %.2e (vs 1e-4)",
            rel40_n, rel40_e, rel40_h, rn, re, rh));
}

void check_fig1_contours(Harness &h) {
  const double eps = h.c.eps;
  const double t = 10.0 * eps;
  // contours where 1e-6 agreement actually sets in (the Gaussian front
  // tail is ~1e-2 at 2 eps and reaches 1e-6 only ~4.3 eps from the front)
  double worst_behind = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double r = (0.05 + (t / eps - 4.5 - 0.05) * i / 200.0) * eps;
    const double a_exp = expanding_field_coeffs(h.c, t, r).a;
    const double a_st = static_field_coeffs(h.c, r).a;
    worst_behind = std::max(worst_behind,
                            std::abs(a_exp - a_st) / std::abs(a_st));
  }
  double worst_ahead = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double r = (t / eps + 4.6 + 10.0 * i / 100.0) * eps;
    const double a_exp = expanding_field_coeffs(h.c, t, r).a;
    const double a_st = static_field_coeffs(h.c, r).a;
    worst_ahead = std::max(worst_ahead, std::abs(a_exp) / std::abs(a_st));
  }
  double worst_point = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double r = (5.0 + 25.0 * i / 100.0) * eps;
    const double a_st = static_field_coeffs(h.c, r).a;
    worst_point = std::max(worst_point,
                           std::abs(a_st - point_dipole_coeff(r)) /
                               point_dipole_coeff(r));
  }
  const double worst =
      std::max({worst_behind / 1e-6, worst_ahead / 1e-6, worst_point / 1e-9});
  h.add("fig1-contours", worst, 1.0, true,
        fmt("behind-front agreement %.2e for r <= t - 4.5 eps (vs 1e-6), "
            "ahead suppression %.2e for r >= t + 4.6 eps (vs 1e-6), "
            "point-dipole match %.2e for r >= 5 eps (vs 1e-9)",
            worst_behind, worst_ahead, worst_point));
}

void check_fig2_shape(Harness &h) {
  const double eps = h.c.eps;
  // coarse argmax of N(t) then golden refinement
  double best_t = 0.0, best_v = -1.0;
  for (int i = 0; i <= 1200; ++i) {
    const double t = 6.0 * eps * i / 1200.0;
    const double v = photon_number_dipole(h.c, t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double a = best_t - 6.0 * eps / 1200.0, b = best_t + 6.0 * eps / 1200.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = photon_number_dipole(h.c, x1), f2 = photon_number_dipole(h.c, x2);
  while (b - a > 1e-10 * eps) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = photon_number_dipole(h.c, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = photon_number_dipole(h.c, x1);
    }
  }
  const double t_peak = 0.5 * (a + b);
  const double n_tilde = static_photon_number_dipole(h.c);
  const double tail = std::abs(
      photon_number_asymptotic(n_tilde, eps, 100.0 * eps) /
          photon_number_dipole(h.c, 100.0 * eps) -
      1.0);
  const bool ok = std::abs(t_peak - 2.1 * eps) <= 0.05 * eps &&
                  photon_number_dipole(h.c, 0.0) == 0.0 && tail <= 1e-3;
  h.add("fig2-shape", ok ? 0.0 : 1.0, 0.5, true,
        fmt("argmax N(t) at t = %.4f eps (2.1 +- 0.05), N(0) = 0, "
            "asymptote mismatch at 100 eps = %.2e",
            t_peak / eps, tail));
}

} // namespace

std::vector<std::string> verification_check_names() {
  return {"special-functions", "dawson-ode", "nascent-deltas",
          "oracle-families", "static-oracle", "dynamic-oracle",
          "field-oracle", "mc-fourier", "energy-conservation",
          "overlap-time-independence", "survival-moments",
          "photon-consistency", "riemann-lebesgue", "field-consistency",
          "front-localization", "lattice-convergence", "fig1-contours",
          "fig2-shape"};
}

std::vector<CheckResult> run_verification(const DipoleCurrent &c,
                                          const VerifyOptions &opts) {
  Harness h{c, opts.tol, {}};
  const auto want = [&](const char *name) {
    return opts.only.empty() || std::string(name).find(opts.only) !=
                                    std::string::npos;
  };
  opts.tol.validate();

  if (want("special-functions"))
    check_special_functions(h);
  if (want("dawson-ode"))
    check_dawson_ode(h);
  if (want("nascent-deltas"))
    check_nascent_deltas(h);
  if (want("oracle-families"))
    check_oracle_families(h);
  if (want("static-oracle"))
    check_static_oracle(h);
  if (want("dynamic-oracle"))
    check_dynamic_oracle(h);
  if (want("field-oracle"))
    check_field_oracle(h);
  if (want("mc-fourier"))
    check_mc_fourier(h);
  if (want("energy-conservation"))
    check_energy_conservation(h);
  if (want("overlap-time-independence"))
    check_overlap(h);
  if (want("survival-moments"))
    check_survival_moments(h);
  if (want("photon-consistency"))
    check_photon_consistency(h);
  if (want("riemann-lebesgue"))
    check_riemann_lebesgue(h);
  if (want("field-consistency"))
    check_field_consistency(h);
  if (want("front-localization"))
    check_front_localization(h);
  if (opts.include_lattice && want("lattice-convergence"))
    check_lattice(h);
  if (want("fig1-contours"))
    check_fig1_contours(h);
  if (want("fig2-shape"))
    check_fig2_shape(h);
  return h.results;
}

std::string format_verification_report(
    const std::vector<CheckResult> &results) {
  std::ostringstream out;
  size_t passed = 0;
  for (const CheckResult &r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.name
        << fmt("  (observed %.3e vs threshold %.3e%s)", r.observed,
               r.threshold, r.converged ? "" : ", NOT CONVERGED")
        << "\n";
    if (!r.detail.empty())
      out << "      " << r.detail << "\n";
    if (r.passed)
      ++passed;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

} // namespace qmag
