#pragma once
#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "curvefold/config.hpp"
#include "curvefold/errors.hpp"
#include "curvefold/spline.hpp"

namespace curvefold {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;

// A rigid (possibly orientation-reversing) motion of R^3.
struct Isometry3 {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 apply_dir(const Vec3& v) const { return rotation * v; }
  int orientation_sign() const { return rotation.determinant() > 0 ? 1 : -1; }
  Isometry3 inverse() const {
    Isometry3 inv;
    inv.rotation = rotation.transpose();
    inv.translation = -inv.rotation * translation;
    return inv;
  }
  Isometry3 compose(const Isometry3& other) const {  // this after other
    Isometry3 r;
    r.rotation = rotation * other.rotation;
    r.translation = rotation * other.translation + translation;
    return r;
  }
  static Isometry3 identity() { return {}; }
  bool is_orthonormal(double tol) const {
    return (rotation.transpose() * rotation - Mat3::Identity()).cwiseAbs().maxCoeff() < tol;
  }
};

// Arc-length sampled space curve with Frenet data.  Interval curves live on
// s in [-l/2, l/2] (n samples including both ends); closed curves live on
// s in [0, l) (n samples, wrapping).
struct SpaceCurve {
  bool closed = false;
  double length = 0.0;
  double param_offset = 0.0;  // native parameter of the sample at s = 0
  std::vector<double> s;
  std::vector<Vec3> point;
  std::vector<Vec3> e, n, b;          // unit tangent / principal normal / binormal
  std::vector<double> kappa, tau;

  int size() const { return static_cast<int>(point.size()); }
  double step() const { return closed ? length / size() : length / (size() - 1); }
  // Map an index to s; interval indices run front to back.
  double s_at(int i) const { return s[i]; }

  SpaceCurve transformed(const Isometry3& iso) const;
};

// Arc-length sampled plane curve with signed curvature.
struct PlaneCurve {
  bool closed = false;
  double length = 0.0;
  std::vector<double> s;
  std::vector<Vec2> point;
  std::vector<double> mu;

  int size() const { return static_cast<int>(point.size()); }
  double step() const { return closed ? length / size() : length / (size() - 1); }
};

// ---- measurement ----------------------------------------------------------

// Populate e/n/b/kappa/tau from the point samples by finite differences,
// then orthonormalize the frame.  Throws VanishingCurvature if kappa drops
// below tol.tol_kappa anywhere.
void measure_frenet(SpaceCurve& c, const Tolerances& tol = defaults().tol);

// Signed curvature of a plane curve from its point samples.
void measure_plane_curvature(PlaneCurve& c);

// Validate the documented type invariants (arc-length consistency, frame
// orthonormality, positive curvature, periodic wrap).  Throws on violation.
void validate(const SpaceCurve& c, const Tolerances& tol = defaults().tol);
void validate(const PlaneCurve& c, const Tolerances& tol = defaults().tol);

// ---- construction ---------------------------------------------------------

// Equal-arc-length resampling of an ordered point list (spline-based).
SpaceCurve resample_by_arclength(const std::vector<Vec3>& points, int target_n,
                                 bool closed = false, const Tolerances& tol = defaults().tol);
PlaneCurve resample_plane_by_arclength(const std::vector<Vec2>& points, int target_n,
                                       bool closed = false,
                                       const Tolerances& tol = defaults().tol);

// Resample an analytic curve given with its exact derivative; the arc-length
// map is inverted per sample so positions are evaluated exactly.
SpaceCurve sample_analytic(const std::function<Vec3(double)>& f,
                           const std::function<Vec3(double)>& df, double t0, double t1,
                           int target_n, bool closed, const Tolerances& tol = defaults().tol);
PlaneCurve sample_analytic_plane(const std::function<Vec2(double)>& f,
                                 const std::function<Vec2(double)>& df, double t0, double t1,
                                 int target_n, bool closed,
                                 const Tolerances& tol = defaults().tol);

struct FrenetFrame {
  Vec3 point = Vec3::Zero();
  Vec3 e = Vec3::UnitX();
  Vec3 n = Vec3::UnitY();
  Vec3 b = Vec3::UnitZ();
};

// Integrate the Frenet-Serret system c' = e, e' = kappa n, n' = -kappa e +
// tau b, b' = -tau n with fixed-step RK4.  kappa and tau are functions of
// centered arc length s in [-l/2, l/2] (or [0, l) when closed).
SpaceCurve curve_from_kappa_tau(const std::function<double(double)>& kappa,
                                const std::function<double(double)>& tau, double l,
                                const FrenetFrame& initial, bool closed, int n = 0,
                                const Tolerances& tol = defaults().tol);

// Integrate theta' = mu, gamma' = (cos theta, sin theta) to develop a plane
// curve from its signed curvature.
PlaneCurve plane_curve_from_mu(const std::function<double(double)>& mu, double l,
                               const Vec2& origin = Vec2::Zero(), double heading = 0.0,
                               bool closed = false, int n = 0,
                               const Tolerances& tol = defaults().tol);
PlaneCurve plane_curve_from_mu_samples(const std::vector<double>& mu, double l, bool closed,
                                       const Vec2& origin = Vec2::Zero(), double heading = 0.0,
                                       const Tolerances& tol = defaults().tol);

// Orientation reversal c#(s) = c(b + c - s): samples reversed, e and b
// negated, n / kappa / tau kept.
SpaceCurve reverse_curve(const SpaceCurve& c);
PlaneCurve reverse_curve(const PlaneCurve& c);

// Reparametrization c~(s) = c(sigma s + b) of a closed curve (spline
// interpolated; sigma = -1 reverses the orientation).
SpaceCurve shift_closed_curve(const SpaceCurve& c, int sigma, double b);

// Simplicity checks (condition: crease and crease pattern must be embedded).
bool has_self_intersections(const PlaneCurve& c);
bool has_self_intersections(const SpaceCurve& c, double tube_radius);

// Continuous evaluation of curve positions between samples.
class CurveInterpolator {
 public:
  explicit CurveInterpolator(const SpaceCurve& c);
  Vec3 position(double s) const;

 private:
  VectorSpline pos_;
};

// Periodic interpolation of a scalar sample array over [0, l) (closed) or
// [-l/2, l/2] (open).
class ScalarInterpolator {
 public:
  ScalarInterpolator(const std::vector<double>& values, double length, bool closed);
  double eval(double s) const;

 private:
  CubicSpline sp_;
};

}  // namespace curvefold
