#pragma once
#include <cstddef>
#include <vector>

namespace curvefold {

// Fourth-order finite differences on a uniform grid.  Periodic grids use the
// central stencils everywhere; interval grids switch to one-sided stencils of
// the same order near the ends (third derivatives drop to second order there,
// which is enough for the torsion formula).
namespace stencil {

template <class T>
T zero_like(const T& v) {
  return T(v - v);
}

// Fornberg weights: coefficients of f(x_j) for the m-th derivative at z.
inline std::vector<double> fd_weights(const std::vector<double>& x, double z, int m) {
  const int n = static_cast<int>(x.size()) - 1;
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0, c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n + 1);
  for (int j = 0; j <= n; ++j) w[j] = c[j][m];
  return w;
}

template <class T>
std::vector<T> d1(const std::vector<T>& f, double h, bool periodic) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  std::vector<T> out(f.size(), zero_like(f[0]));
  auto at = [&](std::ptrdiff_t i) -> const T& {
    if (periodic) return f[((i % n) + n) % n];
    return f[i];
  };
  const double c = 1.0 / (12.0 * h);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (periodic || (i >= 2 && i <= n - 3)) {
      out[i] = (at(i - 2) - at(i + 2) + 8.0 * (at(i + 1) - at(i - 1))) * c;
    } else if (i == 0) {
      out[i] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * c;
    } else if (i == 1) {
      out[i] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * c;
    } else if (i == n - 2) {
      out[i] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * c;
    } else {  // i == n - 1
      out[i] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * c;
    }
  }
  return out;
}

template <class T>
std::vector<T> d2(const std::vector<T>& f, double h, bool periodic) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  std::vector<T> out(f.size(), zero_like(f[0]));
  auto at = [&](std::ptrdiff_t i) -> const T& {
    if (periodic) return f[((i % n) + n) % n];
    return f[i];
  };
  const double c = 1.0 / (12.0 * h * h);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (periodic || (i >= 2 && i <= n - 3)) {
      out[i] = (-at(i - 2) - at(i + 2) + 16.0 * (at(i + 1) + at(i - 1)) - 30.0 * at(i)) * c;
    } else if (i == 0) {
      out[i] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) * c;
    } else if (i == 1) {
      out[i] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) * c;
    } else if (i == n - 2) {
      out[i] = (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]) * c;
    } else {
      out[i] = (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] - 10.0 * f[n - 6]) * c;
    }
  }
  return out;
}

template <class T>
std::vector<T> d3(const std::vector<T>& f, double h, bool periodic) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  std::vector<T> out(f.size(), zero_like(f[0]));
  auto at = [&](std::ptrdiff_t i) -> const T& {
    if (periodic) return f[((i % n) + n) % n];
    return f[i];
  };
  const double c4 = 1.0 / (8.0 * h * h * h);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (periodic || (i >= 3 && i <= n - 4)) {
      out[i] = (at(i - 3) - at(i + 3) + 8.0 * (at(i + 2) - at(i - 2)) + 13.0 * (at(i - 1) - at(i + 1))) * c4;
    } else {
      // One-sided 7-point stencil of matching order near the ends.
      const std::ptrdiff_t npts = std::min<std::ptrdiff_t>(7, n);
      const std::ptrdiff_t base = i < 3 ? 0 : n - npts;
      std::vector<double> nodes(npts);
      for (std::ptrdiff_t j = 0; j < npts; ++j) nodes[j] = static_cast<double>(base + j - i) * h;
      const std::vector<double> w = fd_weights(nodes, 0.0, 3);
      T acc = zero_like(f[0]);
      for (std::ptrdiff_t j = 0; j < npts; ++j) acc = acc + w[j] * f[base + j];
      out[i] = acc;
    }
  }
  return out;
}

}  // namespace stencil
}  // namespace curvefold
