#include "quadrature.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace qmag {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre on [-1, 1]
// (QUADPACK dqk15 abscissae/weights).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod = 0.0;
  double gauss = 0.0;
  double resabs = 0.0; // Int |f|
};

PanelResult gk15(const std::function<double(double)> &f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  PanelResult r;
  const double fc = f(c);
  r.kronrod = kWgk[7] * fc;
  r.gauss = kWg[3] * fc;
  r.resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    r.kronrod += kWgk[j] * (f1 + f2);
    r.resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) // even-index Gauss nodes interleave at j = 1, 3, 5
      r.gauss += kWg[j / 2] * (f1 + f2);
  }
  r.kronrod *= h;
  r.gauss *= h;
  r.resabs *= std::abs(h);
  return r;
}

struct Panel {
  double a, b, value, error, resabs;
  bool operator<(const Panel &o) const { return error < o.error; }
};

Panel make_panel(const std::function<double(double)> &f, double a, double b) {
  const PanelResult r = gk15(f, a, b);
  // |K - G| bounds the Gauss error and overestimates the Kronrod one;
  // the resabs term is a roundoff floor.
  const double err = std::abs(r.kronrod - r.gauss) + 1e-17 * r.resabs;
  return {a, b, r.kronrod, err, r.resabs};
}

} // namespace

double truncation_radius(const DecayInfo &decay, double tol_rel) {
  const double tol = std::clamp(tol_rel, 1e-300, 0.1);
  const double log_inv = std::log(1.0 / tol);
  switch (decay.kind) {
  case DecayClass::gaussian:
    return decay.scale * (std::sqrt(2.0 * log_inv) + 10.0);
  case DecayClass::exponential:
    return decay.scale * (log_inv + 30.0);
  case DecayClass::algebraic: {
    const double p = std::max(decay.algebraic_power, 1.5);
    // tail of x^-p beyond R is ~ R^(1-p): cap the blow-up for tiny tol
    const double r = std::pow(1.0 / tol, 1.0 / (p - 1.0));
    return decay.scale * std::min(r, 1e8);
  }
  }
  return decay.scale * 50.0;
}

QuadResult integrate_interval(const std::function<double(double)> &f,
                              double a, double b, const Tolerance &tol,
                              long max_evals) {
  tol.validate();
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Panel> heap;
  heap.push(make_panel(f, a, b));
  out.evaluations = 15;
  double total = heap.top().value;
  double total_err = heap.top().error;
  double total_resabs = heap.top().resabs;

  // requested tolerance; a separate roundoff floor stops refinement when
  // no further improvement is possible, without claiming convergence
  auto target = [&] {
    return std::max(tol.abs, tol.rel * std::abs(total));
  };
  auto noise_floor = [&] { return 5e-17 * total_resabs; };

  while (total_err > target() && total_err > noise_floor() &&
         out.evaluations + 30 <= max_evals) {
    if (!std::isfinite(total) || !std::isfinite(total_err))
      break; // divergent integrand blew past double range
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) { // interval exhausted
      heap.push(worst);
      break;
    }
    Panel left = make_panel(f, worst.a, mid);
    Panel right = make_panel(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
  }

  out.value = total;
  out.est_error = total_err;
  out.converged = std::isfinite(total) && std::isfinite(total_err) &&
                  total_err <= target();
  return out;
}

QuadResult integrate_decaying(const std::function<double(double)> &f,
                              const DecayInfo &decay, const Tolerance &tol,
                              long max_evals) {
  const double x_max = truncation_radius(decay, tol.rel);
  return integrate_interval(f, 0.0, x_max, tol, max_evals);
}

QuadResult integrate_oscillatory(const std::function<double(double)> &envelope,
                                 double a, OscKind kind,
                                 const DecayInfo &decay, const Tolerance &tol,
                                 const OscOptions &opts) {
  tol.validate();
  if (!(a >= 0.0))
    throw DomainError("integrate_oscillatory: frequency must be >= 0");
  if (a > 1e4)
    throw RegimeError("integrate_oscillatory: frequency above 1e4; use the "
                      "closed form or asymptotics");

  const auto f = [&](double x) {
    return envelope(x) * (kind == OscKind::cosine ? std::cos(a * x)
                                                  : std::sin(a * x));
  };

  const double x_max = truncation_radius(decay, tol.rel);
  const double seg_len = M_PI / std::max(a, 1.0);
  const long n_seg = static_cast<long>(std::ceil(x_max / seg_len));

  QuadResult out;
  const long per_seg_budget =
      std::max<long>(60, opts.max_evals / std::max<long>(n_seg, 1));
  Tolerance seg_tol(tol.rel, tol.abs / std::max<long>(n_seg, 1));

  std::vector<QuadResult> segs;
  segs.reserve(static_cast<size_t>(n_seg));
  for (long i = 0; i < n_seg; ++i) {
    const double lo = i * seg_len;
    const double hi = std::min((i + 1) * seg_len, x_max);
    QuadResult s = integrate_interval(f, lo, hi, seg_tol, per_seg_budget);
    out.evaluations += s.evaluations;
    segs.push_back(s);
  }

  if (opts.reverse_segments)
    std::reverse(segs.begin(), segs.end());

  // Neumaier compensated sum of the segment values
  double sum = 0.0, comp = 0.0, err = 0.0, gross = 0.0;
  for (const QuadResult &s : segs) {
    const double t = sum + s.value;
    if (std::abs(sum) >= std::abs(s.value))
      comp += (sum - t) + s.value;
    else
      comp += (s.value - t) + sum;
    sum = t;
    err += s.est_error;
    gross += std::abs(s.value);
  }
  out.value = sum + comp;
  out.est_error = err;

  const double target = std::max({tol.abs, tol.rel * std::abs(out.value),
                                  tol.rel * gross, 1e-16 * gross});
  out.converged = err <= target;
  return out;
}

} // namespace qmag
