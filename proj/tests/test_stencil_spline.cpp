#include <doctest.h>

#include <cmath>
#include <vector>

#include "curvefold/spline.hpp"
#include "curvefold/stencil.hpp"

using namespace curvefold;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("fourth-order derivatives of sin on an interval") {
  const int n = 201;
  const double h = 2.0 / (n - 1);
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = std::sin(-1.0 + i * h);
  auto d1 = stencil::d1(f, h, false);
  auto d2 = stencil::d2(f, h, false);
  auto d3 = stencil::d3(f, h, false);
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + i * h;
    CHECK(d1[i] == doctest::Approx(std::cos(x)).epsilon(1e-6));
    CHECK(d2[i] == doctest::Approx(-std::sin(x)).epsilon(1e-5));
    CHECK(d3[i] == doctest::Approx(-std::cos(x)).epsilon(2e-3));
  }
}

TEST_CASE("periodic derivatives have no end effects") {
  const int n = 256;
  const double h = 2.0 * kPi / n;
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = std::cos(i * h);
  auto d1 = stencil::d1(f, h, true);
  auto d3 = stencil::d3(f, h, true);
  for (int i = 0; i < n; ++i) {
    CHECK(d1[i] == doctest::Approx(-std::sin(i * h)).epsilon(1e-8));
    CHECK(d3[i] == doctest::Approx(std::sin(i * h)).epsilon(1e-6));
  }
}

TEST_CASE("clamped spline reproduces a smooth function to fourth order") {
  const int n = 41;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = i / double(n - 1);
    y[i] = std::exp(x[i]) * std::sin(3.0 * x[i]);
  }
  CubicSpline sp(x, y, false);
  double worst = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double t = k / 1000.0;
    worst = std::max(worst, std::abs(sp.eval(t) - std::exp(t) * std::sin(3.0 * t)));
  }
  CHECK(worst < 5e-7);
}

TEST_CASE("periodic spline wraps smoothly") {
  const int n = 64;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = 2.0 * kPi * i / n;
    y[i] = std::sin(x[i]) + 0.3 * std::cos(2.0 * x[i]);
  }
  CubicSpline sp(x, y, true, 2.0 * kPi / n);
  for (int k = 0; k < 500; ++k) {
    const double t = -10.0 + 20.0 * k / 499.0;
    const double ref = std::sin(t) + 0.3 * std::cos(2.0 * t);
    CHECK(sp.eval(t) == doctest::Approx(ref).epsilon(1e-5));
  }
}
