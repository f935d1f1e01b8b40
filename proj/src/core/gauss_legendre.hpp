#pragma once
#include <cmath>
#include <vector>

namespace qmag {

//! Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
//! Legendre recurrence.
struct GaussLegendre {
  std::vector<double> x, w;

  explicit GaussLegendre(int n) : x(static_cast<size_t>(n)), w(static_cast<size_t>(n)) {
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
        const double dx = p0 / pp;
        xi -= dx;
        if (std::abs(dx) < 1e-15)
          break;
      }
      x[static_cast<size_t>(i)] = -xi;
      x[static_cast<size_t>(n - 1 - i)] = xi;
      w[static_cast<size_t>(i)] = w[static_cast<size_t>(n - 1 - i)] =
          2.0 / ((1.0 - xi * xi) * pp * pp);
    }
  }
};

} // namespace qmag
