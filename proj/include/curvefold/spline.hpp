#pragma once
#include <vector>

namespace curvefold {

// Scalar cubic spline interpolation on a strictly increasing knot vector.
// Open splines are clamped with end slopes estimated to fourth order from
// the data (no artificial flattening at the ends); periodic splines close
// the system over the period.
class CubicSpline {
 public:
  CubicSpline() = default;
  // For periodic splines, `period` is the knot distance from the last sample
  // back to the first; pass 0 for open splines.
  CubicSpline(std::vector<double> x, std::vector<double> y, bool periodic, double period = 0.0);

  double eval(double t) const;
  double deriv(double t) const;
  bool periodic() const { return periodic_; }

 private:
  int find_interval(double& t) const;

  std::vector<double> x_, y_, m_;  // knots, values, second derivatives
  bool periodic_ = false;
  double period_ = 0.0;  // full period (x span + closing gap) when periodic
};

// Convenience: component-wise splines through d-dimensional points.
class VectorSpline {
 public:
  VectorSpline() = default;
  VectorSpline(const std::vector<double>& x, const std::vector<std::vector<double>>& components,
               bool periodic, double period = 0.0);

  int dim() const { return static_cast<int>(comp_.size()); }
  void eval(double t, double* out) const;
  void deriv(double t, double* out) const;

 private:
  std::vector<CubicSpline> comp_;
};

}  // namespace curvefold
