#include "curvefold/strip.hpp"

#include <algorithm>
#include <cmath>

#include "curvefold/kernels.hpp"
#include "curvefold/stencil.hpp"

namespace curvefold {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::vector<double>> components3(const std::vector<Vec3>& pts) {
  std::vector<std::vector<double>> comp(3, std::vector<double>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < 3; ++k) comp[k][i] = pts[i][k];
  return comp;
}

}  // namespace

DevelopableStrip build_strip_from_samples(const SpaceCurve& crease,
                                          const std::vector<double>& alpha, double width,
                                          const Tolerances& tol,
                                          const std::vector<double>& mu_override) {
  const int n = crease.size();
  if (static_cast<int>(alpha.size()) != n)
    fail(ErrorCode::InvalidConfig, "alpha sample count does not match the crease");
  DevelopableStrip f;
  f.crease = crease;
  f.alpha = alpha;
  if (width > 0.0) {
    f.width = width;
  } else {
    // Long closed creases fold over well inside 5% of their length, so the
    // default width is also capped by the curvature scale.
    double kap_max = 0.0;
    for (double k : crease.kappa) kap_max = std::max(kap_max, k);
    f.width = std::min(defaults().mesh.width_rel * crease.length,
                       defaults().mesh.width_kappa_cap / kap_max);
  }

  for (int i = 0; i < n; ++i) {
    const double a = std::abs(alpha[i]);
    if (a < tol.tol_alpha || a > 0.5 * kPi - tol.tol_alpha)
      fail(ErrorCode::AlphaOutOfRange,
           "alpha touches 0 or +-pi/2 at sample " + std::to_string(i));
    const int next = (i + 1 < n) ? i + 1 : (crease.closed ? 0 : -1);
    if (next >= 0 && alpha[i] * alpha[next] < 0.0)
      fail(ErrorCode::AlphaOutOfRange,
           "alpha crosses 0 between samples " + std::to_string(i) + " and " +
               std::to_string(next));
  }

  f.dalpha = stencil::d1(f.alpha, crease.step(), crease.closed);
  f.beta.resize(n);
  f.mu.resize(n);
  f.xi.resize(n);
  f.conormal.resize(n);
  for (int i = 0; i < n; ++i) {
    const double sa = std::sin(f.alpha[i]), ca = std::cos(f.alpha[i]);
    const double q = (f.dalpha[i] + crease.tau[i]) / (crease.kappa[i] * sa);
    f.beta[i] = 0.5 * kPi - std::atan(q);  // arccot with branch in (0, pi)
    f.conormal[i] = ca * crease.n[i] + sa * crease.b[i];
    f.xi[i] = std::cos(f.beta[i]) * crease.e[i] + std::sin(f.beta[i]) * f.conormal[i];
    f.mu[i] = mu_override.empty() ? crease.kappa[i] * ca : mu_override[i];
  }
  return f;
}

DevelopableStrip build_strip(const SpaceCurve& crease, const std::function<double(double)>& alpha,
                             double width, const Tolerances& tol) {
  std::vector<double> a(crease.size());
  for (int i = 0; i < crease.size(); ++i) a[i] = alpha(crease.s[i] + crease.param_offset);
  return build_strip_from_samples(crease, a, width, tol);
}

bool is_admissible(const DevelopableStrip& f, const Tolerances& tol) {
  double mu_max = f.mu[0], kap_min = f.crease.kappa[0];
  for (int i = 0; i < f.size(); ++i) {
    mu_max = std::max(mu_max, f.mu[i]);
    kap_min = std::min(kap_min, f.crease.kappa[i]);
  }
  return mu_max < kap_min - tol.tol_kappa;
}

std::vector<double> mean_curvature_along_crease(const DevelopableStrip& f) {
  std::vector<double> H(f.size());
  for (int i = 0; i < f.size(); ++i) {
    const double k = f.crease.kappa[i], sa = std::sin(f.alpha[i]);
    const double w = f.dalpha[i] + f.crease.tau[i];
    H[i] = (k * k * sa * sa + w * w) / (2.0 * k * std::abs(sa));
  }
  return H;
}

std::vector<double> beta_identity_residual(const DevelopableStrip& f) {
  std::vector<double> r(f.size());
  for (int i = 0; i < f.size(); ++i) {
    const double lhs = (std::cos(f.beta[i]) / std::sin(f.beta[i])) * f.crease.kappa[i] *
                       std::sin(f.alpha[i]);
    r[i] = std::abs(lhs - (f.dalpha[i] + f.crease.tau[i]));
  }
  return r;
}

DevelopableStrip dual_strip(const DevelopableStrip& f, const Tolerances& tol) {
  std::vector<double> neg(f.alpha.size());
  for (size_t i = 0; i < f.alpha.size(); ++i) neg[i] = -f.alpha[i];
  return build_strip_from_samples(f.crease, neg, f.width, tol, f.mu);
}

StripMesh sample_mesh(const DevelopableStrip& f, int n_v, double v0, double v1,
                      const Tolerances& tol) {
  if (n_v <= 0) n_v = defaults().mesh.n_v;
  if (v0 > v1) {
    v0 = -f.width;
    v1 = f.width;
  }
  const int n = f.size();
  const SpaceCurve& c = f.crease;
  const auto dxi = stencil::d1(f.xi, c.step(), c.closed);

  // Embedding check: the surface normal direction (f_s x f_v) must keep its
  // sign across the band; it is linear in v.
  for (int i = 0; i < n; ++i) {
    const Vec3 g0 = c.e[i].cross(f.xi[i]);
    const Vec3 g1 = dxi[i].cross(f.xi[i]);
    const Vec3 nref = g0.normalized();
    for (double v : {v0, v1}) {
      if ((g0 + v * g1).dot(nref) <= 0.0)
        fail(ErrorCode::SelfIntersectingMesh,
             "rulings cross inside the band near s = " + std::to_string(c.s[i]));
    }
  }

  StripMesh mesh;
  mesh.ns = n;
  mesh.nv = n_v;
  mesh.wrap = c.closed;
  mesh.vertices.resize(static_cast<size_t>(n) * n_v);
  mesh.sv.resize(mesh.vertices.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n_v; ++j) {
      const double v = v0 + (v1 - v0) * j / (n_v - 1);
      mesh.vertices[static_cast<size_t>(i) * n_v + j] = c.point[i] + v * f.xi[i];
      mesh.sv[static_cast<size_t>(i) * n_v + j] = {c.s[i], v};
    }
  }
  const int rows = c.closed ? n : n - 1;
  mesh.faces.reserve(static_cast<size_t>(rows) * (n_v - 1) * 2);
  for (int i = 0; i < rows; ++i) {
    const int i1 = (i + 1) % n;
    for (int j = 0; j + 1 < n_v; ++j) {
      const int a = i * n_v + j, b = i1 * n_v + j, cc = i1 * n_v + j + 1, d = i * n_v + j + 1;
      mesh.faces.push_back({a, b, cc});
      mesh.faces.push_back({a, cc, d});
    }
  }
  mesh.face_normals.resize(mesh.faces.size());
  for (size_t t = 0; t < mesh.faces.size(); ++t) {
    const auto& tri = mesh.faces[t];
    mesh.face_normals[t] = (mesh.vertices[tri[1]] - mesh.vertices[tri[0]])
                               .cross(mesh.vertices[tri[2]] - mesh.vertices[tri[0]])
                               .normalized();
  }
  mesh.max_angle_defect = kernels::max_angle_defect(mesh);
  (void)tol;
  return mesh;
}

StripSampler::StripSampler(const DevelopableStrip& f)
    : pos_(f.crease.s, components3(f.crease.point), f.crease.closed,
           f.crease.closed ? f.crease.step() : 0.0),
      xi_(f.crease.s, components3(f.xi), f.crease.closed,
          f.crease.closed ? f.crease.step() : 0.0),
      base_(f.crease.point),
      dir_(f.xi),
      len_(f.crease.length),
      width_(f.width),
      closed_(f.crease.closed),
      n_(f.size()) {}

void StripSampler::ruling(double s, Vec3& base, Vec3& dir) const {
  if (!closed_) s = std::clamp(s, -0.5 * len_, 0.5 * len_);
  double buf[3];
  pos_.eval(s, buf);
  base = Vec3(buf[0], buf[1], buf[2]);
  xi_.eval(s, buf);
  dir = Vec3(buf[0], buf[1], buf[2]).normalized();
}

double StripSampler::grid_s(int i) const {
  return closed_ ? i * len_ / n_ : -0.5 * len_ + i * len_ / (n_ - 1);
}

IntersectionCheck strips_intersect_only_along_crease(const DevelopableStrip& a,
                                                     const DevelopableStrip& b, double eps,
                                                     const Tolerances& tol) {
  IntersectionCheck out;
  const int n = a.size();
  // Identical strips (same crease image, same rulings) are a degenerate full
  // overlap, reported separately.
  if (b.size() == n && a.crease.closed == b.crease.closed) {
    auto same = [&](bool reversed) {
      for (int i = 0; i < n; i += std::max(1, n / 64)) {
        const int j = reversed ? (a.crease.closed ? (n - i) % n : n - 1 - i) : i;
        if ((a.crease.point[i] - b.crease.point[j]).norm() > 1e-9 * a.length()) return false;
        if ((a.xi[i] - b.xi[j]).norm() > 1e-9) return false;
      }
      return true;
    };
    if (same(false) || same(true)) {
      out.identical = true;
      out.only_along_crease = false;
      return out;
    }
  }
  const double tube = tol.tol_sym_rel * a.length();
  StripSampler sa(a), sb(b);
  auto res = kernels::band_clearance(sa, sb, -eps, eps, -eps, eps, tube);
  const double contact = 1e-3 * tube;
  out.distance = res.min_distance;
  out.offending_a = res.point_a;
  out.offending_b = res.point_b;
  out.worst_s = res.s_at_min;
  out.only_along_crease = res.min_distance > contact;
  return out;
}

PlaneCurve develop_crease_pattern(const DevelopableStrip& f, const Tolerances& tol) {
  const SpaceCurve& c = f.crease;
  const double l = c.length;
  if (!c.closed) return plane_curve_from_mu_samples(f.mu, l, false, Vec2::Zero(), 0.0, tol);
  // Closed creases develop to an open arc of length l; unwrap mu from the
  // torus grid onto the centered interval.
  ScalarInterpolator interp(f.mu, l, true);
  return plane_curve_from_mu([&](double s) { return interp.eval(s + 0.5 * l); }, l, Vec2::Zero(),
                             0.0, false, c.size() + 1, tol);
}

OrigamiMap build_origami_map(const DevelopableStrip& f, const Tolerances& tol) {
  OrigamiMap om;
  om.upper = f;
  om.lower = dual_strip(f, tol);
  om.crease_pattern = develop_crease_pattern(f, tol);
  if (has_self_intersections(om.crease_pattern))
    fail(ErrorCode::SelfIntersectingCurve, "crease pattern is not simple");
  om.beta_left = f.beta;
  om.beta_right.resize(f.size());
  for (int i = 0; i < f.size(); ++i) om.beta_right[i] = kPi - om.lower.beta[i];
  return om;
}

}  // namespace curvefold
