#include "curvefold/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvefold {

namespace {

// Solve the tridiagonal-with-corners system of a periodic natural spline via
// a dense solve on the (small) cyclic system when n is small, otherwise the
// Sherman-Morrison splitting of the cyclic tridiagonal matrix.
std::vector<double> solve_cyclic_tridiag(const std::vector<double>& a,  // sub
                                         const std::vector<double>& b,  // diag
                                         const std::vector<double>& c,  // super
                                         std::vector<double> r) {
  const int n = static_cast<int>(b.size());
  auto solve_tridiag = [&](std::vector<double> bb, std::vector<double> rr) {
    std::vector<double> x(n);
    for (int i = 1; i < n; ++i) {
      double w = a[i] / bb[i - 1];
      bb[i] -= w * c[i - 1];
      rr[i] -= w * rr[i - 1];
    }
    x[n - 1] = rr[n - 1] / bb[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = (rr[i] - c[i] * x[i + 1]) / bb[i];
    return x;
  };
  // Sherman-Morrison: A_cyclic = A_tri + u v^T with corners a[0] (bottom-left
  // is c[n-1], top-right is a[0]).
  const double alpha = a[0], beta = c[n - 1];
  const double gamma = -b[0];
  std::vector<double> bb = b;
  bb[0] -= gamma;
  bb[n - 1] -= alpha * beta / gamma;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = beta;
  std::vector<double> x = solve_tridiag(bb, r);
  std::vector<double> z = solve_tridiag(bb, u);
  double fact = (x[0] + alpha * x[n - 1] / gamma) / (1.0 + z[0] + alpha * z[n - 1] / gamma);
  for (int i = 0; i < n; ++i) x[i] -= fact * z[i];
  return x;
}

}  // namespace

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y, bool periodic, double period)
    : x_(std::move(x)), y_(std::move(y)), periodic_(periodic) {
  const int n = static_cast<int>(x_.size());
  if (n < 4) throw std::invalid_argument("CubicSpline: need at least 4 samples");
  if (periodic_) {
    if (period <= 0.0) throw std::invalid_argument("CubicSpline: periodic spline needs a period");
    period_ = (x_[n - 1] - x_[0]) + period;
    // Unknown second derivatives m_i at the n knots; closing interval wraps.
    std::vector<double> sub(n), diag(n), sup(n), rhs(n);
    auto h = [&](int i) { return (i == n - 1) ? period : (x_[i + 1] - x_[i]); };
    auto dy = [&](int i) { return ((i == n - 1) ? y_[0] : y_[i + 1]) - y_[i]; };
    for (int i = 0; i < n; ++i) {
      const int im = (i + n - 1) % n;
      sub[i] = h(im);
      diag[i] = 2.0 * (h(im) + h(i));
      sup[i] = h(i);
      rhs[i] = 6.0 * (dy(i) / h(i) - dy(im) / h(im));
    }
    m_ = solve_cyclic_tridiag(sub, diag, sup, rhs);
  } else {
    // Clamped spline; end slopes from a quartic through the 5 boundary knots.
    auto lagrange_slope = [&](int base, int at) {
      double d = 0.0;
      for (int j = 0; j < 5; ++j) {
        double basis = 0.0;
        for (int k = 0; k < 5; ++k) {
          if (k == j) continue;
          double term = 1.0;
          for (int r = 0; r < 5; ++r) {
            if (r == j || r == k) continue;
            term *= (x_[base + at] - x_[base + r]) / (x_[base + j] - x_[base + r]);
          }
          basis += term / (x_[base + j] - x_[base + k]);
        }
        d += y_[base + j] * basis;
      }
      return d;
    };
    const int nb = std::min(5, n);
    const double s0 = (n >= 5) ? lagrange_slope(0, 0)
                               : (y_[1] - y_[0]) / (x_[1] - x_[0]);
    const double s1 = (n >= 5) ? lagrange_slope(n - nb, nb - 1)
                               : (y_[n - 1] - y_[n - 2]) / (x_[n - 1] - x_[n - 2]);
    std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
    auto h = [&](int i) { return x_[i + 1] - x_[i]; };
    for (int i = 1; i < n - 1; ++i) {
      sub[i] = h(i - 1);
      diag[i] = 2.0 * (h(i - 1) + h(i));
      sup[i] = h(i);
      rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h(i) - (y_[i] - y_[i - 1]) / h(i - 1));
    }
    diag[0] = 2.0 * h(0);
    sup[0] = h(0);
    rhs[0] = 6.0 * ((y_[1] - y_[0]) / h(0) - s0);
    sub[n - 1] = h(n - 2);
    diag[n - 1] = 2.0 * h(n - 2);
    rhs[n - 1] = 6.0 * (s1 - (y_[n - 1] - y_[n - 2]) / h(n - 2));
    // Thomas; the system is strictly diagonally dominant.
    for (int i = 1; i < n; ++i) {
      double w = sub[i] / diag[i - 1];
      diag[i] -= w * sup[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    m_.assign(n, 0.0);
    m_[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; --i) m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
  }
}

int CubicSpline::find_interval(double& t) const {
  const int n = static_cast<int>(x_.size());
  if (periodic_) {
    double u = std::fmod(t - x_[0], period_);
    if (u < 0) u += period_;
    t = x_[0] + u;
  }
  int lo = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), t) - x_.begin()) - 1;
  if (periodic_) {
    lo = std::clamp(lo, 0, n - 1);  // lo == n-1 is the wrap interval
  } else {
    lo = std::clamp(lo, 0, n - 2);
  }
  return lo;
}

double CubicSpline::eval(double t) const {
  const int n = static_cast<int>(x_.size());
  int i = find_interval(t);
  const bool wrap = periodic_ && i == n - 1;
  const double x0 = x_[i];
  const double h = wrap ? (period_ - (x_[n - 1] - x_[0])) : (x_[i + 1 == n ? i : i + 1] - x_[i]);
  const double y0 = y_[i], y1 = wrap ? y_[0] : y_[i + 1];
  const double m0 = m_[i], m1 = wrap ? m_[0] : m_[i + 1];
  const double a = (t - x0) / h, b = 1.0 - a;
  return b * y0 + a * y1 + ((b * b * b - b) * m0 + (a * a * a - a) * m1) * h * h / 6.0;
}

double CubicSpline::deriv(double t) const {
  const int n = static_cast<int>(x_.size());
  int i = find_interval(t);
  const bool wrap = periodic_ && i == n - 1;
  const double x0 = x_[i];
  const double h = wrap ? (period_ - (x_[n - 1] - x_[0])) : (x_[i + 1 == n ? i : i + 1] - x_[i]);
  const double y0 = y_[i], y1 = wrap ? y_[0] : y_[i + 1];
  const double m0 = m_[i], m1 = wrap ? m_[0] : m_[i + 1];
  const double a = (t - x0) / h, b = 1.0 - a;
  return (y1 - y0) / h + ((3.0 * a * a - 1.0) * m1 - (3.0 * b * b - 1.0) * m0) * h / 6.0;
}

VectorSpline::VectorSpline(const std::vector<double>& x,
                           const std::vector<std::vector<double>>& components, bool periodic,
                           double period) {
  comp_.reserve(components.size());
  for (const auto& c : components) comp_.emplace_back(x, c, periodic, period);
}

void VectorSpline::eval(double t, double* out) const {
  for (size_t k = 0; k < comp_.size(); ++k) out[k] = comp_[k].eval(t);
}

void VectorSpline::deriv(double t, double* out) const {
  for (size_t k = 0; k < comp_.size(); ++k) out[k] = comp_[k].deriv(t);
}

}  // namespace curvefold
