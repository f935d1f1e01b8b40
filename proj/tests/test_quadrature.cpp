#include <doctest.h>

#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/special_functions.hpp"

#include <cmath>
#include <random>

using namespace qmag;

namespace {
const DecayInfo kHalfGauss{DecayClass::gaussian, 1.0, 0.0};
const DecayInfo kQuarterGauss{DecayClass::gaussian, std::sqrt(2.0), 0.0};
} // namespace

TEST_CASE("decaying integrals: gaussian moments") {
  const QuadResult q2 = integrate_decaying(
      [](double x) { return x * x * std::exp(-x * x / 2.0); }, kHalfGauss,
      Tolerance(1e-13, 1e-300));
  REQUIRE(q2.converged);
  CHECK(q2.value == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));

  const QuadResult q1 = integrate_decaying(
      [](double x) { return x * std::exp(-x * x / 2.0); }, kHalfGauss,
      Tolerance(1e-13, 1e-300));
  REQUIRE(q1.converged);
  CHECK(q1.value == doctest::Approx(1.0).epsilon(1e-12));

  const QuadResult q0 = integrate_decaying([](double) { return 0.0; },
                                           kHalfGauss, Tolerance());
  CHECK(q0.value == 0.0);
  CHECK(q0.converged);
}

TEST_CASE("unattainable tolerance is reported, not hidden") {
  const QuadResult q = integrate_decaying(
      [](double x) { return x * std::exp(-x * x / 2.0); }, kHalfGauss,
      Tolerance(1e-30, 1e-300), 20000);
  CHECK_FALSE(q.converged);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10)); // value still usable
}

TEST_CASE("oscillatory integrals: the radial families") {
  // I2 at a = 1: the (1 - a^2) prefactor kills the closed form
  const QuadResult i2 = integrate_oscillatory(
      [](double x) { return x * x * std::exp(-x * x / 2.0); }, 1.0,
      OscKind::cosine, kHalfGauss, Tolerance(1e-13, 1e-300));
  CHECK(std::abs(i2.value) < 1e-10);

  // I3 at a = 0 reduces to the first gaussian moment
  const QuadResult i3 = integrate_oscillatory(
      [](double x) { return x * std::exp(-x * x / 2.0); }, 0.0,
      OscKind::cosine, kHalfGauss, Tolerance(1e-13, 1e-300));
  CHECK(i3.value == doctest::Approx(1.0).epsilon(1e-12));

  // I at a = 1: Int exp(-x^2/4) sin(x)/x = (pi/2) qmag::erf(1)
  const QuadResult i = integrate_oscillatory(
      [](double x) { return std::exp(-x * x / 4.0) / x; }, 1.0, OscKind::sine,
      kQuarterGauss, Tolerance(1e-13, 1e-300));
  CHECK(i.value == doctest::Approx(M_PI / 2.0 * qmag::erf(1.0)).epsilon(1e-10));
}

TEST_CASE("oscillatory families vs closed forms at 50 random frequencies") {
  std::mt19937_64 rng(0xfadedcafeULL);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  const Tolerance tol(1e-12, 1e-300);
  for (int i = 0; i < 50; ++i) {
    const double a = uniform(0.0, 100.0);
    // relative agreement floored at 1e-6 of the family scale: the
    // gaussian closed forms underflow double precision beyond a ~ 38, so
    // below the floor this asserts absolute accuracy 1e-14 x scale
    const auto rel = [](double got, double want, double scale) {
      return std::abs(got - want) /
             std::max({std::abs(want), std::abs(got), 1e-6 * scale});
    };

    const QuadResult qi = integrate_oscillatory(
        [](double x) { return std::exp(-x * x / 4.0) / x; }, a, OscKind::sine,
        kQuarterGauss, tol);
    CHECK(rel(qi.value, M_PI / 2.0 * qmag::erf(a), M_PI / 2.0) < 1e-8);

    const QuadResult qc = integrate_oscillatory(
        [](double x) { return std::exp(-x * x / 4.0); }, a, OscKind::cosine,
        kQuarterGauss, tol);
    CHECK(rel(qc.value, std::sqrt(M_PI) * std::exp(-a * a), std::sqrt(M_PI)) <
          1e-8);

    const QuadResult q2 = integrate_oscillatory(
        [](double x) { return x * x * std::exp(-x * x / 2.0); }, a,
        OscKind::cosine, kHalfGauss, tol);
    const double closed2 =
        std::sqrt(M_PI / 2.0) * (1.0 - a * a) * std::exp(-a * a / 2.0);
    CHECK(rel(q2.value, closed2, std::sqrt(M_PI / 2.0)) < 1e-8);

    const QuadResult q3 = integrate_oscillatory(
        [](double x) { return x * std::exp(-x * x / 2.0); }, a,
        OscKind::cosine, kHalfGauss, tol);
    const double closed3 =
        1.0 - std::sqrt(2.0) * a * dawson(a / std::sqrt(2.0));
    CHECK(rel(q3.value, closed3, 1.0) < 1e-8);
  }
}

TEST_CASE("oscillatory integrator: segment-order and truncation stability") {
  const Tolerance tol(1e-12, 1e-300);
  const auto env = [](double x) { return x * std::exp(-x * x / 2.0); };
  const QuadResult fwd =
      integrate_oscillatory(env, 7.3, OscKind::cosine, kHalfGauss, tol);
  OscOptions rev;
  rev.reverse_segments = true;
  const QuadResult bwd =
      integrate_oscillatory(env, 7.3, OscKind::cosine, kHalfGauss, tol, rev);
  CHECK(std::abs(fwd.value - bwd.value) <=
        1e-13 * std::max(1.0, std::abs(fwd.value)));

  // doubling the truncation radius must stay inside the error estimate
  DecayInfo wide = kHalfGauss;
  wide.scale *= 2.0;
  const QuadResult wider =
      integrate_oscillatory(env, 7.3, OscKind::cosine, wide, tol);
  CHECK(std::abs(wider.value - fwd.value) <=
        fwd.est_error + wider.est_error + 1e-300);
}

TEST_CASE("oscillatory integrator refuses extreme frequencies") {
  CHECK_THROWS_AS(integrate_oscillatory([](double) { return 1.0; }, 2e4,
                                        OscKind::cosine, kHalfGauss,
                                        Tolerance()),
                  RegimeError);
  CHECK_THROWS_AS(integrate_oscillatory([](double) { return 1.0; }, -1.0,
                                        OscKind::cosine, kHalfGauss,
                                        Tolerance()),
                  DomainError);
}

TEST_CASE("interval quadrature handles a boundary-layer integrand") {
  // sharp Gaussian inside a wide interval
  const QuadResult q = integrate_interval(
      [](double x) { return std::exp(-(x - 3.0) * (x - 3.0) * 400.0); }, 0.0,
      20.0, Tolerance(1e-12, 1e-300));
  REQUIRE(q.converged);
  CHECK(q.value ==
        doctest::Approx(std::sqrt(M_PI / 400.0)).epsilon(1e-11));
}
