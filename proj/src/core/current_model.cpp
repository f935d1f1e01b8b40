#include "current_model.hpp"

#include "errors.hpp"
#include "gauss_legendre.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace qmag {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

Vec3 dipole_j_position(const DipoleCurrent &c, const Vec3 &r) {
  const double rr = norm(r);
  const double eps2 = c.eps * c.eps;
  const double se = std::sqrt(kPi) * c.eps;
  const double delta3 = std::exp(-rr * rr / eps2) / (se * se * se);
  return cross(c.mu, r) * (2.0 / eps2 * delta3);
}

CVec3 dipole_j_fourier(const DipoleCurrent &c, const Vec3 &k) {
  const double k2 = dot(k, k);
  const Vec3 mxk = cross(c.mu, k);
  const double env = std::exp(-c.eps * c.eps * k2 / 4.0);
  const std::complex<double> mi(0.0, -1.0);
  return {mi * (mxk.x * env), mi * (mxk.y * env), mi * (mxk.z * env)};
}

FourierCurrent dipole_fourier_current(const DipoleCurrent &c) {
  return {[c](const Vec3 &k) { return dipole_j_fourier(c, k); }};
}

SpectralWeight dipole_spectral_weight(const DipoleCurrent &c) {
  const double mu2 = c.mu_mag() * c.mu_mag();
  const double eps2 = c.eps * c.eps;
  SpectralWeight sw;
  sw.w = [mu2, eps2](double w) {
    const double w2 = w * w;
    return mu2 * w2 * w2 * std::exp(-eps2 * w2 / 2.0) / (6.0 * kPi * kPi);
  };
  sw.decay = {DecayClass::gaussian, 1.0 / c.eps, 0.0};
  return sw;
}

SpectralWeight general_spectral_weight(const FourierCurrent &jf,
                                       const DecayInfo &decay, int n_polar) {
  if (n_polar < 6)
    throw DomainError("general_spectral_weight: need >= 6 polar nodes");

  // transversality probe on a few shells and directions
  const GaussLegendre probe(8);
  for (double wfac : {0.3, 1.0, 3.0}) {
    const double w = wfac * decay.scale;
    for (int i = 0; i < 8; ++i) {
      const double ct = probe.x[static_cast<size_t>(i)];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const double phi = 2.0 * kPi * i / 8.0 + 0.37;
      const Vec3 khat{st * std::cos(phi), st * std::sin(phi), ct};
      const CVec3 j = jf.jk(khat * w);
      const double j2 = norm2(j);
      if (j2 > 0.0 && std::abs(dot(j, khat)) > 1e-8 * std::sqrt(j2))
        throw InvalidCurrentError(
            "general_spectral_weight: current is not transverse");
    }
  }

  auto rule = std::make_shared<GaussLegendre>(n_polar);
  const int n_phi = 2 * n_polar;
  SpectralWeight sw;
  sw.w = [jf, rule, n_phi](double w) {
    // Int dOmega |J(w khat)|^2 by product rule, then w^2/(2 (2pi)^3)
    double acc = 0.0;
    for (size_t i = 0; i < rule->x.size(); ++i) {
      const double ct = rule->x[i];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      double ring = 0.0;
      for (int p = 0; p < n_phi; ++p) {
        const double phi = 2.0 * kPi * p / n_phi;
        const Vec3 k{w * st * std::cos(phi), w * st * std::sin(phi), w * ct};
        ring += norm2(jf.jk(k));
      }
      acc += rule->w[i] * ring * (2.0 * kPi / n_phi);
    }
    const double twopi = 2.0 * kPi;
    return acc * w * w / (2.0 * twopi * twopi * twopi);
  };
  sw.decay = decay;
  return sw;
}

std::array<std::array<double, 3>, 3>
polarization_completeness(const Vec3 &k) {
  const double k2 = dot(k, k);
  if (!(k2 > 0.0))
    throw DomainError("polarization_completeness: k must be non-zero");
  const double kk[3] = {k.x, k.y, k.z};
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (i == j ? 1.0 : 0.0) - kk[i] * kk[j] / k2;
  return m;
}

} // namespace qmag
