#pragma once
#include "current_model.hpp"
#include "quadrature.hpp"

#include <cstdint>
#include <vector>

namespace qmag {

// Brute-force momentum-space evaluation of the closed forms used
// everywhere else.  Each function here is an independent route: it starts
// from the defining d^3k integral, reduces the angular part with the
// plane-wave kernel Int dOmega exp(i k.r) = 4 pi sin(kr)/(kr), and hands
// the remaining 1d radial integral to the adaptive segmented quadrature.

//! 4 pi sin(x)/x with the x -> 0 limit.
double planewave_angular_average(double x);

//! Int_0^inf W(w) w^power dw  (power may be negative).
QuadResult weight_moment(const SpectralWeight &w, int power,
                         const Tolerance &tol = {});

//! Int_0^inf W(w) cos(w t) / w^inverse_power dw  -- the oscillatory
//! integral behind the free-field energy (p = 2) and photon number (p = 3).
QuadResult weight_cosine_moment(const SpectralWeight &w, int inverse_power,
                                double t, const Tolerance &tol = {});

//! Int_0^inf W(w) sin(w t) / w^inverse_power dw  (survival-amplitude phase).
QuadResult weight_sine_moment(const SpectralWeight &w, int inverse_power,
                              double t, const Tolerance &tol = {});

//! Int_0^inf W(w) f(w) dw for an arbitrary bounded factor f, by plain
//! adaptive subdivision (no oscillation-aware segmentation) -- a second,
//! independent numerical route for cross-checks.
QuadResult weight_custom_moment(const SpectralWeight &w,
                                const std::function<double(double)> &f,
                                const Tolerance &tol = {});

//! Transverse-projection coefficient of the mean vector potential of the
//! static dipole at radius r, from the defining momentum integral.  The
//! closed form it must reproduce multiplies (mu x rhat).
QuadResult vector_coeff_static_oracle(const DipoleCurrent &c, double r,
                                      const Tolerance &tol = {});

//! Same for the expanding field at time t (adds the retarded correction
//! with its cos(w t) phase under the integral).
QuadResult vector_coeff_expanding_oracle(const DipoleCurrent &c, double t,
                                         double r, const Tolerance &tol = {});

//! 3d Monte Carlo evaluation of the static coefficient (validation of the
//! angular reduction).  Deterministic for a fixed seed.
struct MonteCarloResult {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  long samples = 0;
};
MonteCarloResult vector_coeff_static_mc(const DipoleCurrent &c, double r,
                                        std::uint64_t seed = 20125u,
                                        long samples = 400000);

//! Late-time decay report for Int dw (W/w^p) cos(w t) on a time grid.
struct DecayReport {
  std::vector<double> t;
  std::vector<double> value;
  double value_at_zero = 0.0;
  double max_tail = 0.0; // max |value| over the second half of the grid
};
DecayReport riemann_lebesgue_check(const SpectralWeight &w, int inverse_power,
                                   const std::vector<double> &t_grid,
                                   const Tolerance &tol = {});

} // namespace qmag
