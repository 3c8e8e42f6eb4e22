#pragma once
#include <vector>

#include "curvefold/curve.hpp"

namespace curvefold {

struct DevelopableStrip;
struct StripMesh;
class StripSampler;

// Data-parallel geometry kernels.  Each has a serial reference implementation
// (`*_serial`) used to validate the OpenMP version; results are identical
// because all reductions are order-independent (max / logical-or).
namespace kernels {

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);
double segment_segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1,
                                Vec3* cp = nullptr, Vec3* cq = nullptr);

// Distance from a point to the band {c(s) + v xi(s), v in [v0, v1]} of a
// strip: coarse scan over the ruling grid, then golden-section refinement in
// s on the interpolated strip.
double point_to_strip_distance(const Vec3& p, const StripSampler& strip, double v0, double v1);

// max over points of distance to the strip band; `cutoff >= 0` allows early
// exit as soon as some point exceeds it (returns that distance).
double max_distance_to_strip_serial(const std::vector<Vec3>& pts, const StripSampler& strip,
                                    double v0, double v1, double cutoff);
double max_distance_to_strip(const std::vector<Vec3>& pts, const StripSampler& strip, double v0,
                             double v1, double cutoff);

// Clearance of two strip bands outside the crease tube: minimum distance
// between A's rulings restricted to [av0, av1] minus the tube |v| < tube and
// B's band over [bv0, bv1].
struct ClearanceResult {
  double min_distance = 0.0;
  double s_at_min = 0.0;
  Vec3 point_a = Vec3::Zero();
  Vec3 point_b = Vec3::Zero();
};
ClearanceResult band_clearance_serial(const StripSampler& a, const StripSampler& b, double av0,
                                      double av1, double bv0, double bv1, double tube_radius);
ClearanceResult band_clearance(const StripSampler& a, const StripSampler& b, double av0,
                               double av1, double bv0, double bv1, double tube_radius);

// Max angle defect (2 pi minus the sum of incident triangle angles) over the
// interior vertices of a strip mesh.
double max_angle_defect_serial(const StripMesh& mesh);
double max_angle_defect(const StripMesh& mesh);

}  // namespace kernels
}  // namespace curvefold
