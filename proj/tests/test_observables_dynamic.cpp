#include <doctest.h>

#include "core/errors.hpp"
#include "core/observables_dynamic.hpp"
#include "core/observables_static.hpp"
#include "core/special_functions.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace qmag;

namespace {
const DipoleCurrent kUnit({0.0, 0.0, 1.0}, 1.0);
} // namespace

TEST_CASE("mode amplitudes after the switch-on") {
  const std::complex<double> lambda(0.3, -0.4);
  const double omega = 2.0;

  const ModeAmplitude at0 = mode_amplitude(lambda, omega, 0.0);
  CHECK(std::abs(at0.alpha) == 0.0);
  CHECK(std::abs(at0.phi) == 0.0);

  // half period: alpha = -2 lambda, maximal occupation 4 |lambda|^2
  const ModeAmplitude half = mode_amplitude(lambda, omega, M_PI / omega);
  CHECK(std::abs(half.alpha + 2.0 * lambda) < 1e-14);
  CHECK(std::norm(half.alpha) ==
        doctest::Approx(4.0 * std::norm(lambda)).epsilon(1e-13));

  // full period: revival
  const ModeAmplitude full = mode_amplitude(lambda, omega, 2.0 * M_PI / omega);
  CHECK(std::abs(full.alpha) < 1e-14);

  CHECK_THROWS_AS(mode_amplitude(lambda, omega, -0.1), DomainError);
  CHECK_THROWS_AS(mode_amplitude(lambda, 0.0, 1.0), DomainError);

  // |alpha|^2 = 2 |lambda|^2 (1 - cos w t): bounded and periodic
  std::mt19937_64 rng(11u);
  for (int i = 0; i < 200; ++i) {
    const double t = (rng() % 10000) * 0.01;
    const ModeAmplitude m = mode_amplitude(lambda, omega, t);
    const double occ = std::norm(m.alpha);
    CHECK(occ <= 4.0 * std::norm(lambda) * (1.0 + 1e-12));
    CHECK(occ == doctest::Approx(2.0 * std::norm(lambda) *
                                 (1.0 - std::cos(omega * t)))
                     .epsilon(1e-12));
    // phase functional definition
    const std::complex<double> expected_phi =
        (std::complex<double>(1.0, omega * t) -
         std::polar(1.0, omega * t)) *
        std::norm(lambda);
    CHECK(std::abs(m.phi - expected_phi) < 1e-13);
  }
}

TEST_CASE("overlap of static and expanding states") {
  CHECK(overlap_static_expanding(0.0) == 1.0);
  // dipole at mu = eps = 1: exp(-1/(12 pi^2))
  CHECK(overlap_static_expanding(static_photon_number_dipole(kUnit)) ==
        doctest::Approx(0.9915921136887197).epsilon(1e-12));
  // microscopic magnet
  CHECK(overlap_static_expanding(5.8e-5) ==
        doctest::Approx(0.99997).epsilon(1e-4));
  CHECK_THROWS_AS(overlap_static_expanding(-1.0), DomainError);
}

TEST_CASE("free-field energy of the expanding state") {
  const SpectralWeight w = dipole_spectral_weight(kUnit);
  const double e_tilde = static_energy_dipole(kUnit);

  CHECK(free_field_energy_dipole(kUnit, 0.0) == 0.0);
  CHECK(free_field_energy(w, e_tilde, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(free_field_energy_limit(e_tilde) == -2.0 * e_tilde);

  // closed form vs quadrature at t = eps
  CHECK(free_field_energy_dipole(kUnit, 1.0) ==
        doctest::Approx(free_field_energy(w, e_tilde, 1.0)).epsilon(1e-9));

  // <H1> = -<H0> and total energy zero, for 100 random times
  std::mt19937_64 rng(23u);
  for (int i = 0; i < 100; ++i) {
    const double t = (rng() % 50000) * 1e-3;
    const double h0 = free_field_energy_dipole(kUnit, t);
    CHECK(h0 + interaction_energy(h0) == 0.0);
  }
  CHECK_THROWS_AS(free_field_energy_dipole(kUnit, -1.0), DomainError);
}

TEST_CASE("hamiltonian cumulants of the dipole") {
  const CumulantSet c = cumulants_dipole(kUnit);
  CHECK(c.h2 == doctest::Approx(0.033773727880779257).epsilon(1e-14));
  CHECK(c.h3 == doctest::Approx(0.063493635934240970).epsilon(1e-14));
  CHECK(c.h4 == doctest::Approx(0.13509491152311703).epsilon(1e-14));

  const CumulantSet q = cumulants(dipole_spectral_weight(kUnit));
  CHECK(q.h2 == doctest::Approx(c.h2).epsilon(1e-10));
  CHECK(q.h3 == doctest::Approx(c.h3).epsilon(1e-10));
  CHECK(q.h4 == doctest::Approx(c.h4).epsilon(1e-10));

  const CumulantSet off = cumulants_dipole({{0.0, 0.0, 0.0}, 1.0});
  CHECK(off.h2 == 0.0);
  CHECK(off.h3 == 0.0);
  CHECK(off.h4 == 0.0);

  CHECK_THROWS_AS(c.h(5), DomainError);
  CHECK_THROWS_AS(cumulants(dipole_spectral_weight(kUnit), 5), DomainError);
}

TEST_CASE("energy statistics from the cumulants") {
  const EnergyStats s = energy_stats(cumulants_dipole(kUnit));
  CHECK(s.mean == 0.0);
  CHECK(s.sigma == doctest::Approx(0.18377629847393068).epsilon(1e-14));
  // skewness (3 pi/2)^{3/2} eps/mu and excess kurtosis 12 pi^2 (eps/mu)^2
  CHECK(s.skewness ==
        doctest::Approx(std::pow(1.5 * M_PI, 1.5)).epsilon(1e-13));
  CHECK(s.excess_kurtosis ==
        doctest::Approx(12.0 * M_PI * M_PI).epsilon(1e-13));
  // raw moments <H^2> = h2, <H^3> = h3, <H^4> = h4 + 3 h2^2
  const CumulantSet c = cumulants_dipole(kUnit);
  CHECK(s.m2 == c.h2);
  CHECK(s.m3 == c.h3);
  CHECK(s.m4 == doctest::Approx(c.h4 + 3.0 * c.h2 * c.h2).epsilon(1e-15));

  // the mu-dependence of skewness/kurtosis
  const DipoleCurrent c2({0.0, 0.0, 2.0}, 1.0);
  const EnergyStats s2 = energy_stats(cumulants_dipole(c2));
  CHECK(s2.skewness ==
        doctest::Approx(std::pow(1.5 * M_PI, 1.5) / 2.0).epsilon(1e-13));
  CHECK(s2.excess_kurtosis ==
        doctest::Approx(12.0 * M_PI * M_PI / 4.0).epsilon(1e-13));

  CHECK_THROWS_AS(energy_stats(CumulantSet{0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(energy_stats(CumulantSet{0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("survival amplitude: normalization, bound, closed form") {
  const SpectralWeight w = dipole_spectral_weight(kUnit);
  CHECK(std::abs(survival_amplitude(w, 0.0) - 1.0) < 1e-12);

  // |F(s)| <= 1 on a broad grid, and |F| = exp(-N(s)/2) for the dipole
  for (int i = 1; i <= 40; ++i) {
    const double s = 100.0 * i / 40.0;
    const std::complex<double> f = survival_amplitude(w, s);
    CHECK(std::abs(f) <= 1.0 + 1e-12);
    const double n_s = photon_number_dipole(kUnit, s);
    CHECK(std::abs(f) == doctest::Approx(std::exp(-0.5 * n_s)).epsilon(1e-9));
  }

  // F(-s) = conj(F(s)) (real spectral weight)
  const std::complex<double> fp = survival_amplitude(w, 2.5);
  const std::complex<double> fm = survival_amplitude(w, -2.5);
  CHECK(std::abs(fm - std::conj(fp)) < 1e-12);
}

TEST_CASE("moments from finite differences of the survival amplitude") {
  const SpectralWeight w = dipole_spectral_weight(kUnit);
  const auto m = survival_moments(w, kUnit.eps);
  const CumulantSet c = cumulants_dipole(kUnit);
  CHECK(std::abs(m[0]) < 1e-5 * std::sqrt(c.h2)); // <H> = 0
  CHECK(m[1] == doctest::Approx(c.h2).epsilon(1e-5));
  CHECK(m[2] == doctest::Approx(c.h3).epsilon(1e-5));
  CHECK(m[3] == doctest::Approx(c.h4 + 3.0 * c.h2 * c.h2).epsilon(1e-5));
}

TEST_CASE("photon number of the expanding state") {
  const SpectralWeight w = dipole_spectral_weight(kUnit);
  const double n_tilde = static_photon_number_dipole(kUnit);

  CHECK(photon_number_dipole(kUnit, 0.0) == 0.0);
  CHECK(photon_number(w, n_tilde, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(photon_number_limit(n_tilde) == 2.0 * n_tilde);

  // closed form vs quadrature at t = eps
  CHECK(photon_number_dipole(kUnit, 1.0) ==
        doctest::Approx(photon_number(w, n_tilde, 1.0)).epsilon(1e-9));

  // late-time approach to 2 Ntilde
  CHECK(photon_number_dipole(kUnit, 1000.0) / (2.0 * n_tilde) ==
        doctest::Approx(1.0).epsilon(1e-4));

  // the maximum sits near t = 2.1 eps
  double best_t = 0.0, best_n = -1.0;
  for (int i = 0; i <= 6000; ++i) {
    const double t = 6.0 * i / 6000.0;
    const double n = photon_number_dipole(kUnit, t);
    if (n > best_n) {
      best_n = n;
      best_t = t;
    }
  }
  CHECK(best_t == doctest::Approx(2.1).epsilon(0.025));
  CHECK(best_n / n_tilde > 2.0); // overshoot above the late-time value

  CHECK_THROWS_AS(photon_number_dipole(kUnit, -1.0), DomainError);
}

TEST_CASE("algebraic late-time tail of the photon number") {
  const double n_tilde = static_photon_number_dipole(kUnit);
  CHECK_THROWS_AS(photon_number_asymptotic(n_tilde, 1.0, 5.0), RegimeError);
  CHECK(photon_number_asymptotic(n_tilde, 1.0, 100.0) ==
        doctest::Approx(2.0 * n_tilde * 1.0001).epsilon(1e-12));
  // matches the exact curve to 1e-3 at t = 100 eps
  CHECK(photon_number_asymptotic(n_tilde, 1.0, 100.0) ==
        doctest::Approx(photon_number_dipole(kUnit, 100.0)).epsilon(1e-3));
  // rise, overshoot, decay to 2: spot-check the rescaled curve shape
  const double early = photon_number_dipole(kUnit, 0.5) / n_tilde;
  const double peak = photon_number_dipole(kUnit, 2.12) / n_tilde;
  const double late = photon_number_dipole(kUnit, 50.0) / n_tilde;
  CHECK(early < 1.0);
  CHECK(peak > 2.5);
  CHECK(late == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("overlap via the mode machinery is time independent") {
  const SpectralWeight w = dipole_spectral_weight(kUnit);
  const double expected =
      overlap_static_expanding(static_photon_number_dipole(kUnit));
  for (double t : {0.1, 1.0, 10.0}) {
    const std::complex<double> o =
        overlap_via_modes(w, t, Tolerance(1e-13, 1e-300));
    CHECK(std::abs(o - expected) < 1e-10);
  }
}
