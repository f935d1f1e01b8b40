#pragma once

namespace qmag {

// The transcendental kernels every closed form in this project reduces to:
// the error function, the Dawson function, Gaussian nascent deltas, and
// half-integer gamma values.  All are pure functions of their arguments.

//! erf(x) = (2/sqrt(pi)) Int_0^x exp(-y^2) dy.  Throws DomainError on
//! non-finite input.
double erf(double x);

//! Dawson function daw(x) = Int_0^x exp(y^2 - x^2) dy, full double range.
//! Maclaurin series for |x| < 1, a sampling series in the mid range,
//! asymptotic series for |x| > 12; the regimes agree to better than 1e-13.
double dawson(double x);

//! Leading small-argument behaviour daw(x) ~= x.  Valid for |x| <= 0.1,
//! RegimeError outside.
double dawson_small(double x);

//! Two-term large-argument asymptote daw(x) ~= 1/(2x) + 1/(4x^3).
//! Valid for |x| >= 10, RegimeError outside.
double dawson_large(double x);

//! Coefficient a_n of the asymptotic ansatz daw(x) = sum_n a_n x^-(2n+1),
//! fixed by d/dx daw = 1 - 2x daw:  a_0 = 1/2, a_{n+1} = (2n+1) a_n / 2.
double dawson_asymptotic_coefficient(int n);

//! 1d nascent delta exp(-x^2/eps^2)/(sqrt(pi) eps); unit integral over R.
double nascent_delta_1d(double x, double eps);

//! 3d nascent delta exp(-r^2/eps^2)/(sqrt(pi) eps)^3; unit integral,
//! 4 pi Int r^2 delta(r) dr = 1.
double nascent_delta_3d(double r, double eps);

//! d/dx of the 1d nascent delta: -(2x/eps^2) delta_eps(x).
double nascent_delta_1d_deriv(double x, double eps);

//! Gamma(k/2) for integer k >= 1 via the exact recursion
//! Gamma(z+1) = z Gamma(z) seeded by Gamma(1/2) = sqrt(pi), Gamma(1) = 1.
double gamma_half(int k);

//! Gaussian moment Int_0^infty x^m exp(-x^2/2) dx
//!   = 2^((m-1)/2) Gamma((m+1)/2),  m >= 0.
double gaussian_moment(int m);

} // namespace qmag
