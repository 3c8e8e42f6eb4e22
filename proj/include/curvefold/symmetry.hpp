#pragma once
#include <optional>
#include <vector>

#include "curvefold/curve.hpp"

namespace curvefold {

// Parameter action s -> sigma * s + d of a curve symmetry.  Interval curves
// only admit (sigma, d) = (-1, 0) besides the identity; on closed curves d
// lives in [0, l).
struct ParamAction {
  int sigma = 1;
  double d = 0.0;
};

struct CurveSymmetry {
  Isometry3 iso;
  ParamAction action;
  bool trivial = false;  // reflection fixing every point (planar curves)
  int sign() const { return iso.orientation_sign(); }
};

struct PlaneEstimate {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
};

struct CurveSymmetryReport {
  bool is_planar = false;
  std::optional<PlaneEstimate> plane;
  bool is_circle = false;
  bool infinite = false;  // circle: the symmetry group is not finite
  std::vector<CurveSymmetry> symmetries;        // non-trivial ones
  std::optional<CurveSymmetry> trivial_symmetry;
  bool has_positive_symmetry = false;  // orientation-preserving, non-trivial
  bool has_negative_symmetry = false;  // orientation-reversing, non-trivial
  bool has_trivial_symmetry = false;

  bool has_any_symmetry() const {
    return has_trivial_symmetry || !symmetries.empty();
  }
  // All candidate congruence motions: identity, trivial reflection, and the
  // non-trivial symmetries.
  std::vector<Isometry3> congruence_candidates() const;
};

// Least-squares rigid registration q_i ~ R p_i + t.  `det_sign` constrains
// the determinant (+1 rotation, -1 reflection, 0 best orthogonal).
Isometry3 fit_rigid(const std::vector<Vec3>& p, const std::vector<Vec3>& q, int det_sign);
double registration_residual(const Isometry3& iso, const std::vector<Vec3>& p,
                             const std::vector<Vec3>& q);

// Shift candidates d (and reflected candidates for sigma = -1) from the
// preimages of a regular value of a periodic sample array.
struct ShiftCandidates {
  std::vector<double> forward;   // sigma = +1, d != 0
  std::vector<double> backward;  // sigma = -1
  bool constant = false;         // array has no usable variation
};
ShiftCandidates periodic_shift_candidates(const std::vector<double>& values, double length,
                                          double flat_tol);

CurveSymmetryReport detect_curve_symmetries(const SpaceCurve& c,
                                            const Tolerances& tol = defaults().tol);

}  // namespace curvefold
