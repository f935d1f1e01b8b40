#pragma once
#include "tolerance.hpp"

#include <functional>

namespace qmag {

//! Outcome of one quadrature.  `converged` implies `est_error` is at or
//! below the requested tolerance (relative tolerance is measured against
//! |value|, or against the unsigned mass of the integrand when the value
//! itself cancels to zero).
struct QuadResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

//! How an integrand on (0, inf) falls off; fixes the truncation radius.
enum class DecayClass { gaussian, exponential, algebraic };

struct DecayInfo {
  DecayClass kind = DecayClass::gaussian;
  //! x-scale of the decay: gaussian ~ exp(-x^2/(2 scale^2)),
  //! exponential ~ exp(-x/scale), algebraic ~ (scale/x)^power.
  double scale = 1.0;
  double algebraic_power = 4.0;
};

//! Upper truncation point such that the neglected tail is below tol_rel
//! for the given decay class (gaussian: scale * (sqrt(2 ln(1/tol)) + 10)).
double truncation_radius(const DecayInfo &decay, double tol_rel);

//! Adaptive Gauss-Kronrod (7-15) on the finite interval [a, b].
QuadResult integrate_interval(const std::function<double(double)> &f,
                              double a, double b, const Tolerance &tol,
                              long max_evals = 1'000'000);

//! Int_0^inf f(x) dx for a decaying, non-oscillatory integrand.
QuadResult integrate_decaying(const std::function<double(double)> &f,
                              const DecayInfo &decay, const Tolerance &tol,
                              long max_evals = 1'000'000);

enum class OscKind { cosine, sine };

struct OscOptions {
  long max_evals = 1'000'000;
  //! sum the half-period segments back-to-front (summation-order check)
  bool reverse_segments = false;
};

//! Int_0^inf envelope(x) * cos(a x) dx  (or sin).  The range is split into
//! half-period segments of length pi/max(a, 1), each integrated by the
//! adaptive rule, and the segment sums are combined with compensated
//! summation.  Frequencies up to a = 1e4 are supported; beyond that a
//! RegimeError asks the caller for a closed form or asymptotics instead.
QuadResult integrate_oscillatory(const std::function<double(double)> &envelope,
                                 double a, OscKind kind,
                                 const DecayInfo &decay, const Tolerance &tol,
                                 const OscOptions &opts = {});

} // namespace qmag
