#pragma once
#include "current_model.hpp"

#include <array>
#include <span>
#include <vector>

namespace qmag {

//! Periodic-box discretisation: modes k = (2 pi / L) n, integer triples
//! n != 0, kept up to |k| <= k_cutoff.  The k = 0 site is excluded; for
//! the dipole J(0) = 0 so the exclusion is exact (a general current with
//! J(0) != 0 would need separate treatment).
struct BoxSpec {
  double box_length = 40.0;
  double k_cutoff = 8.0;

  BoxSpec(double L, double cutoff) : box_length(L), k_cutoff(cutoff) {
    if (!(L > 0.0))
      throw DomainError("BoxSpec: box length must be > 0");
    if (!(cutoff > 2.0 * 3.14159265358979323846 / L))
      throw DomainError("BoxSpec: cutoff below the first lattice shell");
  }
  double spacing() const { return 2.0 * 3.14159265358979323846 / box_length; }
};

//! Deterministic orthonormal transverse pair for one lattice site:
//! Gram-Schmidt of the coordinate axis least aligned with khat.
struct PolarizationBasis {
  Vec3 eta1, eta2;
};
PolarizationBasis build_basis(const Vec3 &k);

enum class LatticeTarget {
  photons,      // sum |lambda|^2            -> Ntilde
  energy,       // -sum w |lambda|^2         -> Etilde
  cumulant,     // sum w^n |lambda|^2        -> h_n
  photons_at_t, // sum |alpha(t)|^2          -> N(t)
};

struct LatticeOptions {
  int cumulant_n = 2;
  double t = 0.0;
  //! sum |J.eta|^2 over an explicit basis instead of using the
  //! completeness relation |J|^2 - |J.khat|^2 (cross-check route)
  bool explicit_polarization = false;
};

//! Lattice sum of the target's summand with lambda = J.eta/sqrt(2 V w^3).
//! Shells of equal |k| are accumulated separately and added in ascending
//! order with compensated summation.  Converges to the continuum value as
//! L -> infinity at fixed cutoff (cutoff >= 8/eps keeps the Gaussian
//! truncation negligible; smaller cutoffs raise RegimeError).
double lattice_sum(const BoxSpec &spec, const DipoleCurrent &c,
                   LatticeTarget target, const LatticeOptions &opts = {});

//! Occupation history 2 |lambda|^2 (1 - cos w t) of one lattice site:
//! periodic, bounded by 4 |lambda|^2, never settles.
std::vector<double> mode_occupation_trace(const BoxSpec &spec,
                                          const DipoleCurrent &c,
                                          const std::array<int, 3> &site,
                                          std::span<const double> t_grid);

//! |lambda|^2 of one site (explicit polarization sum).
double site_lambda_sq(const BoxSpec &spec, const DipoleCurrent &c,
                      const std::array<int, 3> &site);

//! Eliminate the leading 1/L^p error from a pair of box sizes.
double richardson_pair(double value_l, double value_2l, int p);

struct ConvergenceRow {
  double box_length = 0.0;
  double cutoff = 0.0;
  double lattice_value = 0.0;
  double continuum_value = 0.0;
  double rel_err = 0.0;
};

//! Convergence study rows for a list of box lengths at fixed cutoff.
std::vector<ConvergenceRow> lattice_convergence(
    std::span<const double> box_lengths, double cutoff,
    const DipoleCurrent &c, LatticeTarget target, double continuum,
    const LatticeOptions &opts = {});

} // namespace qmag
