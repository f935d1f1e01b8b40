#include "oracles.hpp"

#include "errors.hpp"

#include <cmath>
#include <random>

namespace qmag {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// dimensionless x = w / sigma rescaling of a weight integrand, so the
// truncation radius and segment lengths are O(1) regardless of units
struct ScaledWeight {
  std::function<double(double)> envelope; // of x
  double prefactor;                       // sigma^(1 + power)
  DecayInfo decay;                        // in x
};

ScaledWeight scale_weight(const SpectralWeight &w, int power) {
  const double sigma = w.decay.scale;
  ScaledWeight s;
  s.prefactor = std::pow(sigma, 1.0 + power);
  s.envelope = [w, sigma, power](double x) {
    return w.w(sigma * x) * std::pow(x, power);
  };
  s.decay = w.decay;
  s.decay.scale = 1.0;
  return s;
}

} // namespace

double planewave_angular_average(double x) {
  if (std::abs(x) < 1e-8)
    return 4.0 * kPi * (1.0 - x * x / 6.0);
  return 4.0 * kPi * std::sin(x) / x;
}

QuadResult weight_moment(const SpectralWeight &w, int power,
                         const Tolerance &tol) {
  const ScaledWeight s = scale_weight(w, power);
  QuadResult q = integrate_decaying(s.envelope, s.decay, tol);
  q.value *= s.prefactor;
  q.est_error *= std::abs(s.prefactor);
  return q;
}

namespace {
QuadResult weight_trig_moment(const SpectralWeight &w, int inverse_power,
                              double t, OscKind kind, const Tolerance &tol) {
  const ScaledWeight s = scale_weight(w, -inverse_power);
  const double a = w.decay.scale * t; // t/eps for the dipole
  QuadResult q = integrate_oscillatory(s.envelope, a, kind, s.decay, tol);
  q.value *= s.prefactor;
  q.est_error *= std::abs(s.prefactor);
  return q;
}
} // namespace

QuadResult weight_cosine_moment(const SpectralWeight &w, int inverse_power,
                                double t, const Tolerance &tol) {
  return weight_trig_moment(w, inverse_power, t, OscKind::cosine, tol);
}

QuadResult weight_sine_moment(const SpectralWeight &w, int inverse_power,
                              double t, const Tolerance &tol) {
  return weight_trig_moment(w, inverse_power, t, OscKind::sine, tol);
}

QuadResult weight_custom_moment(const SpectralWeight &w,
                                const std::function<double(double)> &f,
                                const Tolerance &tol) {
  const double sigma = w.decay.scale;
  DecayInfo decay = w.decay;
  decay.scale = 1.0;
  QuadResult q = integrate_decaying(
      [&w, &f, sigma](double x) { return w.w(sigma * x) * f(sigma * x); },
      decay, tol, 4'000'000);
  q.value *= sigma;
  q.est_error *= sigma;
  return q;
}

namespace {

// Pieces of the angular-reduced momentum integral for the mean vector
// potential.  With a = r/eps, b = t/eps the transverse coefficient is
//   alpha(r)      = -(Ic(a) - Is(a)) / (2 pi^2 r eps)            (static)
//   alpha(t, r)   = alpha(r) + [correction with cos(b x) phase],
// where Ic(q) = Int exp(-x^2/4) cos(q x) dx and
//       Is(q) = Int exp(-x^2/4) sin(q x)/(a x) dx.
// The product-to-sum identities split the corrections into the same two
// families at shifted frequencies |a - b| and a + b.

const DecayInfo kQuarterGauss{DecayClass::gaussian, std::sqrt(2.0), 0.0};

QuadResult gauss_cos(double q, const Tolerance &tol) {
  return integrate_oscillatory(
      [](double x) { return std::exp(-x * x / 4.0); }, q, OscKind::cosine,
      kQuarterGauss, tol);
}

QuadResult gauss_sinc(double q, double a, const Tolerance &tol) {
  // Int exp(-x^2/4) sin(qx)/(a x) dx; the integrand is smooth at 0
  return integrate_oscillatory(
      [a](double x) { return std::exp(-x * x / 4.0) / (a * x); }, q,
      OscKind::sine, kQuarterGauss, tol);
}

} // namespace

QuadResult vector_coeff_static_oracle(const DipoleCurrent &c, double r,
                                      const Tolerance &tol) {
  if (!(r > 0.0))
    throw DomainError("vector_coeff_static_oracle: r must be > 0");
  const double a = r / c.eps;
  const QuadResult ic = gauss_cos(a, tol);
  const QuadResult is = gauss_sinc(a, a, tol);
  QuadResult out;
  const double pref = -1.0 / (2.0 * kPi * kPi * r * c.eps);
  out.value = pref * (ic.value - is.value);
  out.est_error = std::abs(pref) * (ic.est_error + is.est_error);
  out.evaluations = ic.evaluations + is.evaluations;
  out.converged = ic.converged && is.converged;
  return out;
}

QuadResult vector_coeff_expanding_oracle(const DipoleCurrent &c, double t,
                                         double r, const Tolerance &tol) {
  if (t < 0.0)
    throw DomainError("vector_coeff_expanding_oracle: t must be >= 0");
  QuadResult out = vector_coeff_static_oracle(c, r, tol);
  const double a = r / c.eps;
  const double b = t / c.eps;
  const double qm = std::abs(a - b);
  const double qp = a + b;
  const double sgn = (a >= b) ? 1.0 : -1.0;

  const QuadResult cm = gauss_cos(qm, tol);
  const QuadResult cp = gauss_cos(qp, tol);
  const QuadResult sm = gauss_sinc(qm, a, tol);
  const QuadResult sp = gauss_sinc(qp, a, tol);

  const double pref = 1.0 / (2.0 * kPi * kPi * r * c.eps);
  out.value += pref * (0.5 * (cm.value + cp.value) -
                       0.5 * (sgn * sm.value + sp.value));
  out.est_error += std::abs(pref) * 0.5 *
                   (cm.est_error + cp.est_error + sm.est_error + sp.est_error);
  out.evaluations +=
      cm.evaluations + cp.evaluations + sm.evaluations + sp.evaluations;
  out.converged = out.converged && cm.converged && cp.converged &&
                  sm.converged && sp.converged;
  return out;
}

MonteCarloResult vector_coeff_static_mc(const DipoleCurrent &c, double r,
                                        std::uint64_t seed, long samples) {
  // importance-sample k from the Gaussian matching the current envelope
  // exp(-eps^2 k^2/4), i.e. sigma^2 = 2/eps^2 per Cartesian component;
  // hand-rolled Box-Muller so the stream is stable across libraries.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  auto gaussian_pair = [&](double &g1, double &g2) {
    const double u = uniform(), v = uniform();
    const double m = std::sqrt(-2.0 * std::log(u));
    g1 = m * std::cos(kTwoPi * v);
    g2 = m * std::sin(kTwoPi * v);
  };

  const double sigma = std::sqrt(2.0) / c.eps;
  const double norm_pdf =
      1.0 / (std::pow(kTwoPi, 1.5) * sigma * sigma * sigma);
  // geometry: take r along x, project the field onto mu x rhat
  const Vec3 rvec{r, 0.0, 0.0};
  const Vec3 proj = cross(c.mu, normalized(rvec));
  const double proj2 = dot(proj, proj);
  if (!(proj2 > 0.0))
    throw DomainError("vector_coeff_static_mc: mu parallel to r");

  double mean = 0.0, m2 = 0.0;
  long n = 0;
  for (long i = 0; i < samples; ++i) {
    double g[4];
    gaussian_pair(g[0], g[1]);
    gaussian_pair(g[2], g[3]);
    const Vec3 k{sigma * g[0], sigma * g[1], sigma * g[2]};
    const double w2 = dot(k, k);
    if (w2 == 0.0)
      continue;
    // integrand of (1/(2pi)^3) [J e^{ik.r}/(2w^2) + c.c.] projected:
    //   (mu x k).proj * sin(k.r) * exp(-eps^2 w^2/4) / (w^2 (2pi)^3)
    const double f = dot(cross(c.mu, k), proj) / proj2 * std::sin(dot(k, rvec)) *
                     std::exp(-c.eps * c.eps * w2 / 4.0) /
                     (w2 * kTwoPi * kTwoPi * kTwoPi);
    const double pdf = norm_pdf * std::exp(-w2 / (2.0 * sigma * sigma));
    const double est = f / pdf;
    ++n;
    const double d = est - mean;
    mean += d / n;
    m2 += d * (est - mean);
  }
  MonteCarloResult out;
  out.value = mean;
  out.std_error = std::sqrt(m2 / (static_cast<double>(n) - 1.0) / n);
  out.seed = seed;
  out.samples = n;
  return out;
}

DecayReport riemann_lebesgue_check(const SpectralWeight &w, int inverse_power,
                                   const std::vector<double> &t_grid,
                                   const Tolerance &tol) {
  DecayReport rep;
  const QuadResult at_zero = weight_moment(w, -inverse_power, tol);
  if (!at_zero.converged)
    throw DivergenceError("riemann_lebesgue_check: Int W/w^p does not "
                          "converge; the lemma does not apply");
  rep.value_at_zero = at_zero.value;
  rep.t = t_grid;
  rep.value.reserve(t_grid.size());
  for (double t : t_grid)
    rep.value.push_back(weight_cosine_moment(w, inverse_power, t, tol).value);
  for (size_t i = t_grid.size() / 2; i < t_grid.size(); ++i)
    rep.max_tail = std::max(rep.max_tail, std::abs(rep.value[i]));
  return rep;
}

} // namespace qmag
