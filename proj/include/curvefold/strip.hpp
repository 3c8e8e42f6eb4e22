#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "curvefold/curve.hpp"

namespace curvefold {

// Developable strip along a crease in normal form: arc-length parametrized
// crease plus the first angular function alpha.  The second angular function
// beta, the ruling field xi, the conormal and the geodesic curvature mu are
// all derived from alpha and the Frenet data of the crease.
struct DevelopableStrip {
  SpaceCurve crease;
  std::vector<double> alpha;
  std::vector<double> dalpha;  // d(alpha)/ds on the sample grid
  std::vector<double> beta;
  std::vector<double> mu;      // kappa * cos(alpha), always positive
  std::vector<Vec3> xi;        // normalized ruling field, xi . n > 0
  std::vector<Vec3> conormal;  // cos(alpha) n + sin(alpha) b
  double width = 0.0;          // half-width used for meshing

  int size() const { return static_cast<int>(alpha.size()); }
  double length() const { return crease.length; }
};

// Build a strip from alpha given as a callable of the crease's native
// parameter (s + param_offset), or directly from samples.  `mu_override`
// lets isomer constructions share the exact geodesic-curvature array.
DevelopableStrip build_strip(const SpaceCurve& crease, const std::function<double(double)>& alpha,
                             double width = 0.0, const Tolerances& tol = defaults().tol);
DevelopableStrip build_strip_from_samples(const SpaceCurve& crease,
                                          const std::vector<double>& alpha, double width = 0.0,
                                          const Tolerances& tol = defaults().tol,
                                          const std::vector<double>& mu_override = {});

// max mu < min kappa over the crease (strict, with a small margin).
bool is_admissible(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

// |H(s)|: restriction of the mean curvature to the crease.
std::vector<double> mean_curvature_along_crease(const DevelopableStrip& f);

// Residual of the defining identity cot(beta) * kappa * sin(alpha) =
// alpha' + tau, reported per sample.
std::vector<double> beta_identity_residual(const DevelopableStrip& f);

// The dual strip: alpha negated, same crease, same mu.
DevelopableStrip dual_strip(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

struct StripMesh {
  int ns = 0, nv = 0;
  std::vector<Vec3> vertices;                    // row-major: [i * nv + j]
  std::vector<std::pair<double, double>> sv;     // per-vertex (s, v)
  std::vector<std::array<int, 3>> faces;
  std::vector<Vec3> face_normals;
  double max_angle_defect = 0.0;
  bool wrap = false;  // closed crease: rows wrap around

  const Vec3& at(int i, int j) const { return vertices[i * nv + j]; }
};

// Sample f(s, v) = c(s) + v xi(s) over v in [v0, v1].  Checks that the band
// is embedded (Jacobian keeps its orientation across the band) and computes
// the max discrete angle defect.
StripMesh sample_mesh(const DevelopableStrip& f, int n_v = 0, double v0 = 1.0, double v1 = -1.0,
                      const Tolerances& tol = defaults().tol);

// Continuous evaluation of a strip's ruling segments, for distance queries.
class StripSampler {
 public:
  explicit StripSampler(const DevelopableStrip& f);
  void ruling(double s, Vec3& base, Vec3& dir) const;  // unit dir
  double length() const { return len_; }
  bool closed() const { return closed_; }
  double width() const { return width_; }
  int grid_size() const { return n_; }
  double grid_s(int i) const;
  const Vec3& grid_base(int i) const { return base_[i]; }
  const Vec3& grid_dir(int i) const { return dir_[i]; }

 private:
  VectorSpline pos_, xi_;
  std::vector<Vec3> base_, dir_;
  double len_ = 0.0, width_ = 0.0;
  bool closed_ = false;
  int n_ = 0;
};

struct IntersectionCheck {
  bool only_along_crease = true;
  bool identical = false;
  Vec3 offending_a = Vec3::Zero();
  Vec3 offending_b = Vec3::Zero();
  double distance = 0.0;
  double worst_s = 0.0;
};

// Do the bands of a and b (half-width eps) meet only inside the crease tube?
IntersectionCheck strips_intersect_only_along_crease(const DevelopableStrip& a,
                                                     const DevelopableStrip& b, double eps,
                                                     const Tolerances& tol = defaults().tol);

// The curved folding: f on v >= 0 glued to its dual on v < 0, plus the
// developed crease pattern and fold angles.
struct OrigamiMap {
  DevelopableStrip upper;
  DevelopableStrip lower;
  PlaneCurve crease_pattern;
  std::vector<double> beta_left;   // = beta of upper
  std::vector<double> beta_right;  // = pi - beta of lower
};

OrigamiMap build_origami_map(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

// Develop just the crease pattern of a strip.
PlaneCurve develop_crease_pattern(const DevelopableStrip& f,
                                  const Tolerances& tol = defaults().tol);

}  // namespace curvefold
