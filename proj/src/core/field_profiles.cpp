#include "field_profiles.hpp"

#include "errors.hpp"
#include "gauss_legendre.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace qmag {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
// switch to the Taylor expansions below this r/eps
constexpr double kSeriesRho = 1e-2;

// scaled Gaussian kernel gbar(x) = exp(-x^2)/sqrt(pi) and its derivatives
// gbar^(n) = (-1)^n H_n(x) gbar(x) (physicists' Hermite polynomials)
double gbar(double x) { return std::exp(-x * x) / kSqrtPi; }

struct GbarDerivs {
  double g0, g2, g3, g4, g5, g6;
};

GbarDerivs gbar_derivs(double x) {
  const double g = gbar(x);
  const double x2 = x * x;
  GbarDerivs d;
  d.g0 = g;
  d.g2 = (4.0 * x2 - 2.0) * g;
  d.g3 = -(8.0 * x2 - 12.0) * x * g;
  d.g4 = (16.0 * x2 * x2 - 48.0 * x2 + 12.0) * g;
  d.g5 = -(32.0 * x2 * x2 - 160.0 * x2 + 120.0) * x * g;
  d.g6 = ((64.0 * x2 * x2 - 480.0 * x2 + 720.0) * x2 - 120.0) * g;
  return d;
}

// ---- scaled (eps = 1) coefficient evaluators -----------------------------
// physical coefficients are a = ahat/eps^2, b = bhat/eps^3, e = ehat/eps^3
// with rho = r/eps, tau = t/eps.

// static vector coefficient: erf(rho)/(4 pi rho^2) - gbar(rho)/(2 pi rho)
double ahat_static(double rho) {
  if (rho < kSeriesRho) {
    // [erf - 2 rho gbar]/(4 pi rho^2) = (2/3 rho - 2/5 rho^3 + 1/7 rho^5)/(2 pi^1.5)
    const double r2 = rho * rho;
    return rho * (2.0 / 3.0 + r2 * (-2.0 / 5.0 + r2 / 7.0)) /
           (2.0 * kPi * kSqrtPi);
  }
  return std::erf(rho) / (4.0 * kPi * rho * rho) -
         gbar(rho) / (2.0 * kPi * rho);
}

// static tensor bracket T = erf/(4 pi rho^3) - gbar/(2 pi rho^2)
double that_static(double rho) {
  if (rho < kSeriesRho) {
    const double r2 = rho * rho;
    return (2.0 / 3.0 + r2 * (-2.0 / 5.0 + r2 / 7.0)) /
           (2.0 * kPi * kSqrtPi);
  }
  return std::erf(rho) / (4.0 * kPi * rho * rho * rho) -
         gbar(rho) / (2.0 * kPi * rho * rho);
}

FieldCoeffs coeffs_static_scaled(double rho) {
  FieldCoeffs f;
  const double t = that_static(rho);
  const double g3 = gbar(rho) / kPi; // 3d delta: gbar(rho)/pi = e^{-rho^2}/pi^{3/2}
  f.a = ahat_static(rho);
  f.b_tan = -t + g3;
  // (mu.rhat) rhat part: 3T + gbar'/(2 pi rho), and gbar'/(2 pi rho) = -gbar/pi
  f.b_rad = 3.0 * t - gbar(rho) / kPi;
  f.e = 0.0;
  return f;
}

FieldCoeffs coeffs_expanding_scaled(double rho, double tau) {
  FieldCoeffs f;
  if (rho < kSeriesRho) {
    const GbarDerivs d = gbar_derivs(tau);
    const double r2 = rho * rho;
    const double c1 = (2.0 / kSqrtPi + d.g2) / (6.0 * kPi);
    const double c3 = (d.g4 / 15.0 - 4.0 / (5.0 * kSqrtPi)) / (4.0 * kPi);
    const double c5 = (2.0 / (7.0 * kSqrtPi) + d.g6 / 420.0) / (4.0 * kPi);
    f.a = rho * (c1 + r2 * (c3 + r2 * c5));
    const double p0 = 2.0 / (3.0 * kPi * kSqrtPi) + d.g2 / (3.0 * kPi);
    const double p2 = (-16.0 / (5.0 * kSqrtPi) + 4.0 * d.g4 / 15.0) / (4.0 * kPi);
    const double p4 = (12.0 / (7.0 * kSqrtPi) + d.g6 / 70.0) / (4.0 * kPi);
    f.b_tan = p0 + r2 * (p2 + r2 * p4);
    const double q2 = (8.0 / (5.0 * kSqrtPi) - 2.0 * d.g4 / 15.0) / (4.0 * kPi);
    const double q4 = (-8.0 / (7.0 * kSqrtPi) - d.g6 / 105.0) / (4.0 * kPi);
    f.b_rad = r2 * (q2 + r2 * q4);
    const double e1 = -d.g3 / (6.0 * kPi);
    const double e3 = -d.g5 / (60.0 * kPi);
    f.e = rho * (e1 + r2 * e3);
    return f;
  }

  const double xm = rho - tau, xp = rho + tau;
  const double bracket =
      std::erf(rho) - 0.5 * std::erf(xm) - 0.5 * std::erf(xp);
  const double g = gbar(rho);
  const double gm = gbar(xm), gp_ = gbar(xp);
  const double dgm = -2.0 * xm * gm, dgp = -2.0 * xp * gp_;
  const double psi_p = gm + gp_, dpsi_p = dgm + dgp;
  const double psi_m = gm - gp_, dpsi_m = dgm - dgp;

  const double r2 = rho * rho, r3 = r2 * rho;
  f.a = bracket / (4.0 * kPi * r2) - g / (2.0 * kPi * rho) +
        psi_p / (4.0 * kPi * rho);
  f.b_tan = -bracket / (4.0 * kPi * r3) + g / kPi + g / (2.0 * kPi * r2) +
            (dpsi_p / rho - psi_p / r2) / (4.0 * kPi);
  f.b_rad = 3.0 * bracket / (4.0 * kPi * r3) - 3.0 * g / (2.0 * kPi * r2) -
            g / kPi - (dpsi_p / rho - 3.0 * psi_p / r2) / (4.0 * kPi);
  f.e = (dpsi_m / rho - psi_m / r2) / (4.0 * kPi);
  return f;
}

FieldCoeffs scale_to_physical(FieldCoeffs f, double eps) {
  const double e2 = eps * eps, e3 = e2 * eps;
  f.a /= e2;
  f.b_tan /= e3;
  f.b_rad /= e3;
  f.e /= e3;
  return f;
}

Vec3 assemble_a(const DipoleCurrent &c, const Vec3 &r, double a_coeff) {
  const double rr = norm(r);
  if (rr == 0.0)
    return {};
  return cross(c.mu, r / rr) * a_coeff;
}

Vec3 assemble_b(const DipoleCurrent &c, const Vec3 &r, const FieldCoeffs &f) {
  const double rr = norm(r);
  if (rr == 0.0)
    return c.mu * f.b_tan; // b_rad vanishes at the origin
  const Vec3 rhat = r / rr;
  return c.mu * f.b_tan + rhat * (dot(c.mu, rhat) * f.b_rad);
}

} // namespace

FieldCoeffs static_field_coeffs(const DipoleCurrent &c, double r) {
  if (r < 0.0)
    throw DomainError("static_field_coeffs: r must be >= 0");
  return scale_to_physical(coeffs_static_scaled(r / c.eps), c.eps);
}

FieldCoeffs expanding_field_coeffs(const DipoleCurrent &c, double t,
                                   double r) {
  if (t < 0.0)
    throw DomainError("expanding_field_coeffs: t must be >= 0");
  if (r < 0.0)
    throw DomainError("expanding_field_coeffs: r must be >= 0");
  return scale_to_physical(coeffs_expanding_scaled(r / c.eps, t / c.eps),
                           c.eps);
}

double point_dipole_coeff(double r) { return 1.0 / (4.0 * kPi * r * r); }

Vec3 static_vector_field(const DipoleCurrent &c, const Vec3 &r) {
  return assemble_a(c, r, static_field_coeffs(c, norm(r)).a);
}

Vec3 static_magnetic_field(const DipoleCurrent &c, const Vec3 &r) {
  return assemble_b(c, r, static_field_coeffs(c, norm(r)));
}

Vec3 expanding_vector_field(const DipoleCurrent &c, double t, const Vec3 &r) {
  return assemble_a(c, r, expanding_field_coeffs(c, t, norm(r)).a);
}

Vec3 expanding_magnetic_field(const DipoleCurrent &c, double t,
                              const Vec3 &r) {
  return assemble_b(c, r, expanding_field_coeffs(c, t, norm(r)));
}

Vec3 expanding_electric_field(const DipoleCurrent &c, double t,
                              const Vec3 &r) {
  return assemble_a(c, r, expanding_field_coeffs(c, t, norm(r)).e);
}

RadialProfile expanding_profile(const DipoleCurrent &c, double t,
                                std::span<const double> radii) {
  RadialProfile p;
  p.t = t;
  p.radii.assign(radii.begin(), radii.end());
  if (!std::is_sorted(p.radii.begin(), p.radii.end()))
    throw DomainError("expanding_profile: radii must be increasing");
  p.coeffs.reserve(p.radii.size());
  for (double r : p.radii)
    p.coeffs.push_back(expanding_field_coeffs(c, t, r));
  return p;
}

RadialProfile static_profile(const DipoleCurrent &c,
                             std::span<const double> radii) {
  RadialProfile p;
  p.radii.assign(radii.begin(), radii.end());
  if (!std::is_sorted(p.radii.begin(), p.radii.end()))
    throw DomainError("static_profile: radii must be increasing");
  p.coeffs.reserve(p.radii.size());
  for (double r : p.radii)
    p.coeffs.push_back(static_field_coeffs(c, r));
  return p;
}

FrontInfo locate_front(const DipoleCurrent &c, double t) {
  if (t < 5.0 * c.eps)
    throw RegimeError("locate_front: needs t >= 5 eps (front separated "
                      "from the source)");
  const auto abs_e = [&](double r) {
    return std::abs(expanding_field_coeffs(c, t, r).e);
  };

  // coarse scan around r = t, then golden-section refinement
  const double lo = std::max(0.5 * c.eps, t - 6.0 * c.eps);
  const double hi = t + 6.0 * c.eps;
  const int n = 600;
  double best_r = lo, best_v = -1.0;
  for (int i = 0; i <= n; ++i) {
    const double r = lo + (hi - lo) * i / n;
    const double v = abs_e(r);
    if (v > best_v) {
      best_v = v;
      best_r = r;
    }
  }
  const double step = (hi - lo) / n;
  double a = best_r - step, b = best_r + step;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = abs_e(x1), f2 = abs_e(x2);
  while (b - a > 1e-9 * c.eps) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = abs_e(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = abs_e(x1);
    }
  }
  FrontInfo info;
  info.r_front = 0.5 * (a + b);
  const double peak = abs_e(info.r_front);

  // connected half-maximum region through the peak
  auto bisect_half = [&](double inside, double outside) {
    for (int i = 0; i < 200 && std::abs(outside - inside) > 1e-9 * c.eps;
         ++i) {
      const double mid = 0.5 * (inside + outside);
      (abs_e(mid) >= 0.5 * peak ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
  };
  double r_out = info.r_front;
  while (abs_e(r_out) >= 0.5 * peak)
    r_out += 0.05 * c.eps;
  double r_in = info.r_front;
  while (r_in > 0.05 * c.eps && abs_e(r_in) >= 0.5 * peak)
    r_in -= 0.05 * c.eps;
  info.width = bisect_half(r_out - 0.05 * c.eps, r_out) -
               bisect_half(r_in + 0.05 * c.eps, r_in);
  return info;
}

double energy_localization(const DipoleCurrent &c, double t, double r_lo,
                           double r_hi) {
  if (t < 10.0 * c.eps)
    throw RegimeError("energy_localization: needs t >= 10 eps");
  if (!(r_lo >= 0.0) || !(r_hi > r_lo))
    throw DomainError("energy_localization: shell must be ordered");

  // fixed 32-point Gauss-Legendre rule in cos(theta) (azimuth is exact)
  static const GaussLegendre polar(32);

  const double mu2 = c.mu_mag() * c.mu_mag();
  const auto shell_density = [&](double r) {
    const FieldCoeffs fx = expanding_field_coeffs(c, t, r);
    const FieldCoeffs fs = static_field_coeffs(c, r);
    double acc = 0.0;
    for (size_t i = 0; i < polar.x.size(); ++i) {
      const double c2 = polar.x[i] * polar.x[i];
      const double s2 = 1.0 - c2;
      const double b2x = fx.b_tan * fx.b_tan +
                         (2.0 * fx.b_tan * fx.b_rad + fx.b_rad * fx.b_rad) * c2;
      const double b2s = fs.b_tan * fs.b_tan +
                         (2.0 * fs.b_tan * fs.b_rad + fs.b_rad * fs.b_rad) * c2;
      const double e2 = fx.e * fx.e * s2;
      acc += polar.w[i] * (e2 + b2x - b2s);
    }
    return kPi * acc * mu2 * r * r; // (1/2) * 2 pi azimuth * r^2
  };

  const QuadResult q =
      integrate_interval(shell_density, r_lo, r_hi, Tolerance(1e-9, 1e-14));
  if (!q.converged)
    throw DivergenceError("energy_localization: shell quadrature did not "
                          "converge");
  return q.value;
}

} // namespace qmag
