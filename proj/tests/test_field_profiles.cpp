#include <doctest.h>

#include "core/errors.hpp"
#include "core/field_profiles.hpp"
#include "core/observables_static.hpp"
#include "core/oracles.hpp"
#include "core/special_functions.hpp"

#include <cmath>
#include <random>

using namespace qmag;

namespace {
const DipoleCurrent kUnit({0.0, 0.0, 1.0}, 1.0);

std::mt19937_64 g_rng(0xf1e1dULL);
double uniform(double lo, double hi) {
  return lo + (hi - lo) * ((g_rng() >> 11) + 0.5) * 0x1.0p-53;
}
Vec3 random_point(double rlo, double rhi) {
  const double r = uniform(rlo, rhi);
  const double ct = uniform(-0.95, 0.95);
  const double st = std::sqrt(1.0 - ct * ct);
  const double ph = uniform(0.0, 2.0 * M_PI);
  return {r * st * std::cos(ph), r * st * std::sin(ph), r * ct};
}
} // namespace

TEST_CASE("static vector potential: structure and limits") {
  // parallel to mu: the cross product kills the field
  CHECK(norm(static_vector_field(kUnit, {0.0, 0.0, 3.0})) == 0.0);
  CHECK(norm(static_vector_field(kUnit, {0.0, 0.0, 0.0})) == 0.0);

  // matches the point-dipole coefficient far out (r = 5 eps)
  const double a5 = static_field_coeffs(kUnit, 5.0).a;
  CHECK(std::abs(a5 - point_dipole_coeff(5.0)) / point_dipole_coeff(5.0) <
        1e-9);

  // momentum-integral oracle at several radii
  for (double r : {0.3, 1.0, 2.0, 7.7}) {
    const QuadResult q =
        vector_coeff_static_oracle(kUnit, r, Tolerance(1e-12, 1e-300));
    REQUIRE(q.converged);
    CHECK(static_field_coeffs(kUnit, r).a ==
          doctest::Approx(q.value).epsilon(1e-7));
  }

  // small-r series joins the direct evaluation smoothly
  for (double r : {0.009, 0.0101, 0.02}) {
    const QuadResult q =
        vector_coeff_static_oracle(kUnit, r, Tolerance(1e-12, 1e-300));
    CHECK(static_field_coeffs(kUnit, r).a ==
          doctest::Approx(q.value).epsilon(1e-8));
  }
}

TEST_CASE("static magnetic field: equator, curl, origin, moment sum") {
  // equatorial point-dipole value -mu/(4 pi r^3) at r = 10 eps
  const Vec3 b_eq = static_magnetic_field(kUnit, {10.0, 0.0, 0.0});
  CHECK(b_eq.z == doctest::Approx(-1.0 / (4.0 * M_PI * 1e3)).epsilon(1e-9));
  CHECK(std::abs(b_eq.x) < 1e-18);

  // B = curl A numerically at random points
  const double h = 1e-4;
  for (int i = 0; i < 25; ++i) {
    const Vec3 r = random_point(0.3, 6.0);
    auto a = [&](const Vec3 &p) { return static_vector_field(kUnit, p); };
    const Vec3 curl{
        (a({r.x, r.y + h, r.z}).z - a({r.x, r.y - h, r.z}).z) / (2 * h) -
            (a({r.x, r.y, r.z + h}).y - a({r.x, r.y, r.z - h}).y) / (2 * h),
        (a({r.x, r.y, r.z + h}).x - a({r.x, r.y, r.z - h}).x) / (2 * h) -
            (a({r.x + h, r.y, r.z}).z - a({r.x - h, r.y, r.z}).z) / (2 * h),
        (a({r.x + h, r.y, r.z}).y - a({r.x - h, r.y, r.z}).y) / (2 * h) -
            (a({r.x, r.y + h, r.z}).x - a({r.x, r.y - h, r.z}).x) / (2 * h)};
    const Vec3 b = static_magnetic_field(kUnit, r);
    CHECK(norm(curl - b) <= 1e-5 * norm(b));
  }

  // finite at the origin: B(0) = 2 mu delta3(0) / 3
  const Vec3 b0 = static_magnetic_field(kUnit, {0.0, 0.0, 0.0});
  CHECK(b0.z == doctest::Approx(2.0 / (3.0 * std::pow(M_PI, 1.5)))
                    .epsilon(1e-12));

  // the non-leading terms integrate to 2 mu / 3 over all space: the
  // traceless tensor part drops out under the angular integral, leaving
  //   Int d^3r [mu delta3 + (mu.rhat) rhat g'/(2 pi r)]
  //     = mu [1 + (2/3) Int_0^inf r g'(r) dr] = 2 mu / 3
  const QuadResult q = integrate_decaying(
      [&](double r) {
        const double delta3 = nascent_delta_3d(r, kUnit.eps);
        const double dgdr = nascent_delta_1d_deriv(r, kUnit.eps);
        return 4.0 * M_PI * r * r * delta3 +
               (2.0 / 3.0) * r * dgdr; // (4pi/3)(1/2pi) r g'
      },
      DecayInfo{DecayClass::gaussian, kUnit.eps / std::sqrt(2.0), 0.0},
      Tolerance(1e-10, 1e-300));
  REQUIRE(q.converged);
  CHECK(q.value == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("expanding vector potential: switch-on, overlap windows, causality") {
  // exactly zero at t = 0 (cancellations are exact in the closed form)
  for (double r : {0.05, 0.5, 2.0, 9.0})
    CHECK(expanding_field_coeffs(kUnit, 0.0, r).a == 0.0);
  CHECK(norm(expanding_vector_field(kUnit, 0.0, {1.0, 0.4, -0.2})) == 0.0);

  // behind the front (t = 10 eps, r = 5 eps) the static value holds
  const double a_exp5 = expanding_field_coeffs(kUnit, 10.0, 5.0).a;
  const double a_st5 = static_field_coeffs(kUnit, 5.0).a;
  CHECK(std::abs(a_exp5 - a_st5) / std::abs(a_st5) < 1e-6);

  // ahead of the front (r = 14 eps) the field is a tiny fraction of static
  const double a_exp14 = expanding_field_coeffs(kUnit, 10.0, 14.0).a;
  const double a_st14 = static_field_coeffs(kUnit, 14.0).a;
  CHECK(std::abs(a_exp14) < 1e-6 * std::abs(a_st14));

  // deep causal region: below 1e-12 of the behind-front scale
  const double behind_scale = std::abs(static_field_coeffs(kUnit, 9.0).a);
  for (double r : {16.5, 18.0, 25.0})
    CHECK(std::abs(expanding_field_coeffs(kUnit, 10.0, r).a) <
          1e-12 * behind_scale);

  // static recovery at fixed r as t grows
  const double a_late = expanding_field_coeffs(kUnit, 40.0, 3.0).a;
  const double a_st3 = static_field_coeffs(kUnit, 3.0).a;
  CHECK(std::abs(a_late - a_st3) / std::abs(a_st3) < 1e-12);

  CHECK_THROWS_AS(expanding_field_coeffs(kUnit, -1.0, 1.0), DomainError);

  // oracle cross-check at mixed (t, r), including near the front
  for (int i = 0; i < 10; ++i) {
    const double t = uniform(0.3, 15.0);
    const double r = uniform(0.2, 18.0);
    const QuadResult q =
        vector_coeff_expanding_oracle(kUnit, t, r, Tolerance(1e-12, 1e-300));
    REQUIRE(q.converged);
    const double closed = expanding_field_coeffs(kUnit, t, r).a;
    CHECK(std::abs(closed - q.value) <=
          1e-8 * std::max(std::abs(closed), 3e-3));
  }
}

TEST_CASE("expanding magnetic field: switch-on, curl, behind-front value") {
  // t = 0: the delta-term cancellations leave ~1 ulp of the largest
  // intermediate term (which carries a 1/r^2 amplification at small r)
  for (double r : {0.05, 0.7, 3.0}) {
    const FieldCoeffs f = expanding_field_coeffs(kUnit, 0.0, r);
    const double scale = nascent_delta_3d(0.0, kUnit.eps) +
                         nascent_delta_1d(r, kUnit.eps) /
                             (2.0 * M_PI * r * r);
    CHECK(std::abs(f.b_tan) < 1e-13 * scale);
    CHECK(std::abs(f.b_rad) < 1e-13 * scale);
  }

  // curl check near the front
  const double t = 10.0, h = 1e-4;
  const Vec3 r{6.1, 4.9, 5.0}; // |r| ~ 9.28, just behind the front
  auto a = [&](const Vec3 &p) { return expanding_vector_field(kUnit, t, p); };
  const Vec3 curl{
      (a({r.x, r.y + h, r.z}).z - a({r.x, r.y - h, r.z}).z) / (2 * h) -
          (a({r.x, r.y, r.z + h}).y - a({r.x, r.y, r.z - h}).y) / (2 * h),
      (a({r.x, r.y, r.z + h}).x - a({r.x, r.y, r.z - h}).x) / (2 * h) -
          (a({r.x + h, r.y, r.z}).z - a({r.x - h, r.y, r.z}).z) / (2 * h),
      (a({r.x + h, r.y, r.z}).y - a({r.x - h, r.y, r.z}).y) / (2 * h) -
          (a({r.x, r.y + h, r.z}).x - a({r.x, r.y - h, r.z}).x) / (2 * h)};
  const Vec3 b = expanding_magnetic_field(kUnit, t, r);
  CHECK(norm(curl - b) <= 1e-4 * norm(b));

  // behind the front the field is the static one; the static field in
  // turn matches the point dipole once the exp(-r^2/eps^2) tails die
  // (at r = 3 eps the 3d-delta tail still contributes ~8e-3 relative)
  const Vec3 b3 = expanding_magnetic_field(kUnit, 10.0, {3.0, 0.0, 0.0});
  const Vec3 b3s = static_magnetic_field(kUnit, {3.0, 0.0, 0.0});
  CHECK(b3.z == doctest::Approx(b3s.z).epsilon(1e-9));
  const Vec3 b5 = expanding_magnetic_field(kUnit, 10.0, {5.0, 0.0, 0.0});
  CHECK(b5.z == doctest::Approx(-1.0 / (4.0 * M_PI * 125.0)).epsilon(1e-6));
}

TEST_CASE("expanding electric field: support, time derivative, structure") {
  // vanishes away from the front: 5 eps off, the pulse is ~3e-10 of the
  // peak (the derivative of the gaussian tail, 2u exp(-u^2)/sqrt(pi))
  const double e_peak =
      std::abs(expanding_field_coeffs(kUnit, 10.0, 10.0 + 0.7).e);
  CHECK(std::abs(expanding_field_coeffs(kUnit, 10.0, 5.0).e) <
        1e-9 * e_peak);
  CHECK(std::abs(expanding_field_coeffs(kUnit, 10.0, 15.0).e) <
        1e-9 * e_peak);

  // e = -dA/dt by central differences
  const double h = 1e-4;
  for (double r : {8.8, 9.5, 10.0, 10.5, 11.5}) {
    const double em = expanding_field_coeffs(kUnit, 10.0 - h, r).a;
    const double ep = expanding_field_coeffs(kUnit, 10.0 + h, r).a;
    const double e_num = -(ep - em) / (2.0 * h);
    const double e = expanding_field_coeffs(kUnit, 10.0, r).e;
    CHECK(std::abs(e - e_num) <= 1e-5 * std::max(std::abs(e), e_peak * 1e-3));
  }

  // r || mu kills the vector structure
  CHECK(norm(expanding_electric_field(kUnit, 10.0, {0.0, 0.0, 10.0})) == 0.0);
  CHECK_THROWS_AS(expanding_field_coeffs(kUnit, -2.0, 1.0), DomainError);
}

TEST_CASE("coulomb gauge: numerical divergence of A vanishes") {
  const double t = 10.0, h = 1e-4;
  for (int i = 0; i < 100; ++i) {
    const Vec3 r = random_point(0.5, 14.0);
    auto a = [&](const Vec3 &p) {
      return expanding_vector_field(kUnit, t, p);
    };
    const double div =
        (a({r.x + h, r.y, r.z}).x - a({r.x - h, r.y, r.z}).x +
         a({r.x, r.y + h, r.z}).y - a({r.x, r.y - h, r.z}).y +
         a({r.x, r.y, r.z + h}).z - a({r.x, r.y, r.z - h}).z) /
        (2.0 * h);
    const double scale =
        std::max(norm(a(r)), 1e-6 * point_dipole_coeff(norm(r)));
    CHECK(std::abs(div) * kUnit.eps / scale < 1e-6);
  }
}

TEST_CASE("front location and width") {
  CHECK_THROWS_AS(locate_front(kUnit, 2.0), RegimeError);

  const FrontInfo f10 = locate_front(kUnit, 10.0);
  CHECK(f10.r_front > 9.0);
  CHECK(f10.r_front < 11.0);
  CHECK(f10.width > 0.2);
  CHECK(f10.width < 3.0);

  const FrontInfo f100 = locate_front(kUnit, 100.0);
  CHECK(std::abs(f100.r_front / 100.0 - 1.0) < 0.02);

  // no self-steepening: the width stays O(eps) as t grows
  const FrontInfo f20 = locate_front(kUnit, 20.0);
  const FrontInfo f40 = locate_front(kUnit, 40.0);
  CHECK(f40.width / f20.width > 0.8);
  CHECK(f40.width / f20.width < 1.25);
}

TEST_CASE("the front shell carries the static-field energy") {
  const double e_tilde = static_energy_dipole(kUnit);

  CHECK_THROWS_AS(energy_localization(kUnit, 5.0, 0.0, 10.0), RegimeError);
  CHECK_THROWS_AS(energy_localization(kUnit, 20.0, 5.0, 4.0), DomainError);

  // far behind the front the excess vanishes
  const double behind = energy_localization(kUnit, 20.0, 1e-3, 10.0);
  CHECK(std::abs(behind) < 0.05 * std::abs(e_tilde));

  // the shell [t - 5 eps, t + 5 eps] carries ~|E|
  const double shell20 = energy_localization(kUnit, 20.0, 15.0, 25.0);
  CHECK(shell20 / std::abs(e_tilde) > 0.90);
  CHECK(shell20 / std::abs(e_tilde) < 1.10);

  // stable between t = 20 eps and t = 40 eps
  const double shell40 = energy_localization(kUnit, 40.0, 35.0, 45.0);
  CHECK(std::abs(shell40 / shell20 - 1.0) < 0.05);
}

TEST_CASE("profile scans are ordered and reproduce the coefficients") {
  std::vector<double> radii = {0.5, 1.0, 2.0, 4.0, 8.0};
  const RadialProfile p = expanding_profile(kUnit, 10.0, radii);
  CHECK(p.coeffs.size() == radii.size());
  CHECK(p.coeffs[2].a ==
        doctest::Approx(expanding_field_coeffs(kUnit, 10.0, 2.0).a));
  std::vector<double> bad = {1.0, 0.5};
  CHECK_THROWS_AS(expanding_profile(kUnit, 10.0, bad), DomainError);
}
