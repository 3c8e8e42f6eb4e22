#include "curvefold/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "curvefold/strip.hpp"

namespace curvefold {
namespace kernels {

namespace {
constexpr double kTwoPi = 6.283185307179586476925;

// Golden-section minimization of a smooth 1-d function.
template <class F>
double golden_min(const F& f, double a, double b, int iters, double* xmin) {
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  if (xmin) *xmin = xm;
  return f(xm);
}
}  // namespace

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double t = std::clamp(ab.dot(p - a) / ab.squaredNorm(), 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double segment_segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1,
                                Vec3* cp, Vec3* cq) {
  // Closest points of two segments (Ericson, Real-Time Collision Detection).
  const Vec3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  if (a <= 1e-30 && e <= 1e-30) {
    s = t = 0.0;
  } else if (a <= 1e-30) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= 1e-30) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      if (denom > 1e-30)
        s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  const Vec3 P = p0 + s * d1, Q = q0 + t * d2;
  if (cp) *cp = P;
  if (cq) *cq = Q;
  return (P - Q).norm();
}

double point_to_strip_distance(const Vec3& p, const StripSampler& strip, double v0, double v1) {
  const int n = strip.grid_size();
  int best = 0;
  double bestd = 1e300;
  for (int i = 0; i < n; ++i) {
    const Vec3& base = strip.grid_base(i);
    const Vec3& dir = strip.grid_dir(i);
    const double d = point_segment_distance(p, base + v0 * dir, base + v1 * dir);
    if (d < bestd) {
      bestd = d;
      best = i;
    }
  }
  const double h = strip.length() / (strip.closed() ? n : n - 1);
  const double s0 = strip.grid_s(best);
  auto eval = [&](double s) {
    Vec3 base, dir;
    strip.ruling(s, base, dir);
    return point_segment_distance(p, base + v0 * dir, base + v1 * dir);
  };
  return std::min(bestd, golden_min(eval, s0 - 2.0 * h, s0 + 2.0 * h, 40, nullptr));
}

double max_distance_to_strip_serial(const std::vector<Vec3>& pts, const StripSampler& strip,
                                    double v0, double v1, double cutoff) {
  double worst = 0.0;
  for (const auto& p : pts) {
    worst = std::max(worst, point_to_strip_distance(p, strip, v0, v1));
    if (cutoff >= 0.0 && worst > cutoff) return worst;
  }
  return worst;
}

double max_distance_to_strip(const std::vector<Vec3>& pts, const StripSampler& strip, double v0,
                             double v1, double cutoff) {
  std::atomic<bool> abort{false};
  double worst = 0.0;
  const int m = static_cast<int>(pts.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst)
  for (int i = 0; i < m; ++i) {
    if (abort.load(std::memory_order_relaxed)) continue;
    const double d = point_to_strip_distance(pts[i], strip, v0, v1);
    worst = std::max(worst, d);
    if (cutoff >= 0.0 && d > cutoff) abort.store(true, std::memory_order_relaxed);
  }
  return worst;
}

namespace {

// Min distance between one clipped ruling of A and the band of B.
double ruling_to_band_distance(const Vec3& a0, const Vec3& a1, const StripSampler& b, double bv0,
                               double bv1, Vec3* pa, Vec3* pb) {
  const int n = b.grid_size();
  int best = 0;
  double bestd = 1e300;
  for (int j = 0; j < n; ++j) {
    const Vec3& base = b.grid_base(j);
    const Vec3& dir = b.grid_dir(j);
    const double d = segment_segment_distance(a0, a1, base + bv0 * dir, base + bv1 * dir);
    if (d < bestd) {
      bestd = d;
      best = j;
    }
  }
  const double h = b.length() / (b.closed() ? n : n - 1);
  const double s0 = b.grid_s(best);
  Vec3 bp, bd;
  auto eval = [&](double s) {
    Vec3 base, dir;
    b.ruling(s, base, dir);
    return segment_segment_distance(a0, a1, base + bv0 * dir, base + bv1 * dir);
  };
  double smin;
  const double refined = golden_min(eval, s0 - 2.0 * h, s0 + 2.0 * h, 48, &smin);
  if (refined < bestd) {
    b.ruling(smin, bp, bd);
    segment_segment_distance(a0, a1, bp + bv0 * bd, bp + bv1 * bd, pa, pb);
    return refined;
  }
  b.ruling(s0, bp, bd);
  segment_segment_distance(a0, a1, bp + bv0 * bd, bp + bv1 * bd, pa, pb);
  return bestd;
}

template <bool Parallel>
ClearanceResult band_clearance_impl(const StripSampler& a, const StripSampler& b, double av0,
                                    double av1, double bv0, double bv1, double tube_radius) {
  const int n = a.grid_size();
  ClearanceResult best;
  best.min_distance = 1e300;

#pragma omp parallel if (Parallel)
  {
    ClearanceResult local;
    local.min_distance = 1e300;
#pragma omp for schedule(dynamic, 32) nowait
    for (int i = 0; i < n; ++i) {
      const Vec3& base = a.grid_base(i);
      const Vec3& dir = a.grid_dir(i);
      // A's ruling minus the tube: up to two sub-segments.
      const double pieces[2][2] = {{std::max(av0, tube_radius), av1},
                                   {av0, std::min(av1, -tube_radius)}};
      for (const auto& piece : pieces) {
        const double vlo = piece[0], vhi = piece[1];
        if (vlo >= vhi) continue;
        Vec3 pa, pb;
        const double d =
            ruling_to_band_distance(base + vlo * dir, base + vhi * dir, b, bv0, bv1, &pa, &pb);
        if (d < local.min_distance) {
          local.min_distance = d;
          local.s_at_min = a.grid_s(i);
          local.point_a = pa;
          local.point_b = pb;
        }
      }
    }
#pragma omp critical
    {
      if (local.min_distance < best.min_distance ||
          (local.min_distance == best.min_distance && local.s_at_min < best.s_at_min))
        best = local;
    }
  }
  return best;
}

}  // namespace

ClearanceResult band_clearance_serial(const StripSampler& a, const StripSampler& b, double av0,
                                      double av1, double bv0, double bv1, double tube_radius) {
  return band_clearance_impl<false>(a, b, av0, av1, bv0, bv1, tube_radius);
}

ClearanceResult band_clearance(const StripSampler& a, const StripSampler& b, double av0,
                               double av1, double bv0, double bv1, double tube_radius) {
  return band_clearance_impl<true>(a, b, av0, av1, bv0, bv1, tube_radius);
}

namespace {

template <bool Parallel>
double angle_defect_impl(const StripMesh& mesh) {
  const int ns = mesh.ns, nv = mesh.nv;
  const int rows = mesh.wrap ? ns : ns - 2;  // interior rows (offset by 1 when open)
  double worst = 0.0;
  // Neighbor cycle of the split-quad triangulation around an interior vertex.
  static const int di[6] = {1, 1, 0, -1, -1, 0};
  static const int dj[6] = {0, 1, 1, 0, -1, -1};
#pragma omp parallel for schedule(static) reduction(max : worst) if (Parallel)
  for (int r = 0; r < rows; ++r) {
    const int i = mesh.wrap ? r : r + 1;
    for (int j = 1; j + 1 < nv; ++j) {
      const Vec3& v = mesh.at(i, j);
      double total = 0.0;
      for (int k = 0; k < 6; ++k) {
        const int k2 = (k + 1) % 6;
        auto wrapi = [&](int ii) { return mesh.wrap ? (ii + ns) % ns : ii; };
        const Vec3 u1 = mesh.at(wrapi(i + di[k]), j + dj[k]) - v;
        const Vec3 u2 = mesh.at(wrapi(i + di[k2]), j + dj[k2]) - v;
        total += std::atan2(u1.cross(u2).norm(), u1.dot(u2));
      }
      worst = std::max(worst, std::abs(kTwoPi - total));
    }
  }
  return worst;
}

}  // namespace

double max_angle_defect_serial(const StripMesh& mesh) { return angle_defect_impl<false>(mesh); }
double max_angle_defect(const StripMesh& mesh) { return angle_defect_impl<true>(mesh); }

}  // namespace kernels
}  // namespace curvefold
