#include "box_lattice.hpp"

#include "errors.hpp"

#include <cmath>

namespace qmag {

namespace {

Vec3 least_aligned_axis(const Vec3 &khat) {
  const double ax = std::abs(khat.x), ay = std::abs(khat.y),
               az = std::abs(khat.z);
  if (ax <= ay && ax <= az)
    return {1.0, 0.0, 0.0};
  if (ay <= az)
    return {0.0, 1.0, 0.0};
  return {0.0, 0.0, 1.0};
}

// summand value for one site given |lambda|^2 and w
double target_summand(LatticeTarget target, const LatticeOptions &opts,
                      double lambda_sq, double w) {
  switch (target) {
  case LatticeTarget::photons:
    return lambda_sq;
  case LatticeTarget::energy:
    return -w * lambda_sq;
  case LatticeTarget::cumulant:
    return std::pow(w, opts.cumulant_n) * lambda_sq;
  case LatticeTarget::photons_at_t:
    return 2.0 * lambda_sq * (1.0 - std::cos(w * opts.t));
  }
  return 0.0;
}

} // namespace

PolarizationBasis build_basis(const Vec3 &k) {
  const double kn = norm(k);
  if (!(kn > 0.0))
    throw DomainError("build_basis: k must be non-zero");
  const Vec3 khat = k / kn;
  const Vec3 seed = least_aligned_axis(khat);
  const Vec3 e1 = normalized(seed - khat * dot(seed, khat));
  const Vec3 e2 = cross(khat, e1);
  return {e1, e2};
}

double site_lambda_sq(const BoxSpec &spec, const DipoleCurrent &c,
                      const std::array<int, 3> &site) {
  if (site[0] == 0 && site[1] == 0 && site[2] == 0)
    throw DomainError("site_lambda_sq: k = 0 mode is excluded");
  const double dk = spec.spacing();
  const Vec3 k{dk * site[0], dk * site[1], dk * site[2]};
  const double w = norm(k);
  const double vol = std::pow(spec.box_length, 3);
  const PolarizationBasis basis = build_basis(k);
  const CVec3 j = dipole_j_fourier(c, k);
  const double proj =
      std::norm(dot(j, basis.eta1)) + std::norm(dot(j, basis.eta2));
  return proj / (2.0 * vol * w * w * w);
}

double lattice_sum(const BoxSpec &spec, const DipoleCurrent &c,
                   LatticeTarget target, const LatticeOptions &opts) {
  if (spec.k_cutoff < 8.0 / c.eps)
    throw RegimeError("lattice_sum: cutoff below 8/eps truncates the "
                      "Gaussian tail");
  const double dk = spec.spacing();
  const int n_max = static_cast<int>(std::floor(spec.k_cutoff / dk));
  const long n2_cut =
      static_cast<long>(std::floor((spec.k_cutoff / dk) * (spec.k_cutoff / dk)));

  // per-shell accumulators indexed by the integer |n|^2, so the final
  // reduction runs in ascending |k| with compensated summation
  std::vector<double> shells(static_cast<size_t>(n2_cut) + 1, 0.0);
  const double vol = std::pow(spec.box_length, 3);
  const double mu2 = c.mu_mag() * c.mu_mag();
  const Vec3 mu_hat =
      (mu2 > 0.0) ? c.mu / c.mu_mag() : Vec3{0.0, 0.0, 1.0};

  for (int nx = -n_max; nx <= n_max; ++nx) {
    for (int ny = -n_max; ny <= n_max; ++ny) {
      for (int nz = -n_max; nz <= n_max; ++nz) {
        const long n2 = static_cast<long>(nx) * nx +
                        static_cast<long>(ny) * ny +
                        static_cast<long>(nz) * nz;
        if (n2 == 0 || n2 > n2_cut)
          continue;
        const Vec3 k{dk * nx, dk * ny, dk * nz};
        const double w2 = dot(k, k);
        const double w = std::sqrt(w2);
        double proj; // sum_sigma |J.eta|^2
        if (opts.explicit_polarization) {
          const PolarizationBasis basis = build_basis(k);
          const CVec3 j = dipole_j_fourier(c, k);
          proj = std::norm(dot(j, basis.eta1)) + std::norm(dot(j, basis.eta2));
        } else {
          // completeness: sum_sigma |J.eta|^2 = |J|^2 (transverse current);
          // |J|^2 = mu^2 w^2 sin^2(theta_mu) exp(-eps^2 w^2/2)
          const double cmu = dot(k, mu_hat) / w;
          proj = mu2 * w2 * (1.0 - cmu * cmu) *
                 std::exp(-c.eps * c.eps * w2 / 2.0);
        }
        const double lambda_sq = proj / (2.0 * vol * w * w2);
        shells[static_cast<size_t>(n2)] +=
            target_summand(target, opts, lambda_sq, w);
      }
    }
  }

  // Neumaier sum over shells, ascending |k|
  double sum = 0.0, comp = 0.0;
  for (double s : shells) {
    const double t = sum + s;
    if (std::abs(sum) >= std::abs(s))
      comp += (sum - t) + s;
    else
      comp += (s - t) + sum;
    sum = t;
  }
  return sum + comp;
}

std::vector<double> mode_occupation_trace(const BoxSpec &spec,
                                          const DipoleCurrent &c,
                                          const std::array<int, 3> &site,
                                          std::span<const double> t_grid) {
  const double lambda_sq = site_lambda_sq(spec, c, site);
  const double dk = spec.spacing();
  const Vec3 k{dk * site[0], dk * site[1], dk * site[2]};
  const double w = norm(k);
  std::vector<double> occ;
  occ.reserve(t_grid.size());
  for (double t : t_grid)
    occ.push_back(2.0 * lambda_sq * (1.0 - std::cos(w * t)));
  return occ;
}

double richardson_pair(double value_l, double value_2l, int p) {
  const double f = std::pow(2.0, p);
  return (f * value_2l - value_l) / (f - 1.0);
}

std::vector<ConvergenceRow> lattice_convergence(
    std::span<const double> box_lengths, double cutoff,
    const DipoleCurrent &c, LatticeTarget target, double continuum,
    const LatticeOptions &opts) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(box_lengths.size());
  for (double L : box_lengths) {
    ConvergenceRow row;
    row.box_length = L;
    row.cutoff = cutoff;
    row.lattice_value = lattice_sum(BoxSpec(L, cutoff), c, target, opts);
    row.continuum_value = continuum;
    row.rel_err = (continuum != 0.0)
                      ? std::abs(row.lattice_value - continuum) /
                            std::abs(continuum)
                      : std::abs(row.lattice_value);
    rows.push_back(row);
  }
  return rows;
}

} // namespace qmag
