#include "special_functions.hpp"

#include "errors.hpp"

#include <cmath>
#include <string>

namespace qmag {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void require_finite(double x, const char *who) {
  if (!std::isfinite(x))
    throw DomainError(std::string(who) + ": non-finite input");
}

// Maclaurin series daw(x) = sum_k (-1)^k 2^k x^(2k+1) / (2k+1)!!,
// used for |x| < 1 where it converges without cancellation.
double dawson_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 40; ++k) {
    term *= -2.0 * x2 / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum))
      break;
  }
  return sum;
}

// Mid-range evaluation by the exponentially convergent sampling series
//   daw(x) ~= (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n,
// whose truncation error scales like exp(-(pi/2h)^2); h = 0.25 puts that
// below 1e-17.  The window is recentred so only ~30 Gaussians contribute.
double dawson_sampling(double x) {
  constexpr double h = 0.25;
  constexpr int half_window = 30; // covers |x' - n'h| <= 7.5, exp(-56) tail
  const int centre = 2 * static_cast<int>(std::lround(x / (2.0 * h)));
  const double xp = x - centre * h;
  double sum = 0.0;
  for (int off = -half_window + 1; off < half_window; off += 2) {
    const double d = xp - off * h;
    sum += std::exp(-d * d) / (centre + off);
  }
  return sum / kSqrtPi;
}

// Asymptotic series daw(x) = sum_n a_n / x^(2n+1); terms are added while
// they still decrease, which at |x| > 12 reaches full double precision.
double dawson_asymptotic(double x) {
  const double inv_x2 = 1.0 / (x * x);
  double term = 0.5 / x;
  double sum = term;
  for (int n = 1; n < 40; ++n) {
    term *= (2.0 * n - 1.0) * 0.5 * inv_x2;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum))
      break;
  }
  return sum;
}

} // namespace

double erf(double x) {
  require_finite(x, "erf");
  return std::erf(x);
}

double dawson(double x) {
  require_finite(x, "dawson");
  const double ax = std::abs(x);
  double v;
  if (ax < 1.0)
    v = dawson_series(ax);
  else if (ax <= 12.0)
    v = dawson_sampling(ax);
  else
    v = dawson_asymptotic(ax);
  return std::copysign(v, x);
}

double dawson_small(double x) {
  require_finite(x, "dawson_small");
  if (std::abs(x) > 0.1)
    throw RegimeError("dawson_small: valid for |x| <= 0.1");
  return x;
}

double dawson_large(double x) {
  require_finite(x, "dawson_large");
  if (std::abs(x) < 10.0)
    throw RegimeError("dawson_large: valid for |x| >= 10");
  return 0.5 / x + 0.25 / (x * x * x);
}

double dawson_asymptotic_coefficient(int n) {
  if (n < 0)
    throw DomainError("dawson_asymptotic_coefficient: n >= 0");
  double a = 0.5;
  for (int k = 0; k < n; ++k)
    a *= (2.0 * k + 1.0) / 2.0;
  return a;
}

double nascent_delta_1d(double x, double eps) {
  require_finite(x, "nascent_delta_1d");
  if (!(eps > 0.0))
    throw DomainError("nascent_delta_1d: eps must be > 0");
  const double u = x / eps;
  return std::exp(-u * u) / (kSqrtPi * eps);
}

double nascent_delta_3d(double r, double eps) {
  require_finite(r, "nascent_delta_3d");
  if (!(eps > 0.0))
    throw DomainError("nascent_delta_3d: eps must be > 0");
  if (r < 0.0)
    throw DomainError("nascent_delta_3d: r must be >= 0");
  const double u = r / eps;
  const double se = kSqrtPi * eps;
  return std::exp(-u * u) / (se * se * se);
}

double nascent_delta_1d_deriv(double x, double eps) {
  return -2.0 * x / (eps * eps) * nascent_delta_1d(x, eps);
}

double gamma_half(int k) {
  if (k < 1)
    throw DomainError("gamma_half: argument k/2 needs k >= 1");
  // peel Gamma(k/2) down to the seed Gamma(1) = 1 or Gamma(1/2) = sqrt(pi)
  double g = (k % 2 == 0) ? 1.0 : kSqrtPi;
  for (int j = k - 2; j >= 1; j -= 2)
    g *= 0.5 * j;
  return g;
}

double gaussian_moment(int m) {
  if (m < 0)
    throw DomainError("gaussian_moment: m must be >= 0");
  return std::exp2(0.5 * (m - 1)) * gamma_half(m + 1);
}

} // namespace qmag
