#include "curvefold/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace curvefold {

std::vector<Isometry3> CurveSymmetryReport::congruence_candidates() const {
  std::vector<Isometry3> out;
  out.push_back(Isometry3::identity());
  if (trivial_symmetry) out.push_back(trivial_symmetry->iso);
  for (const auto& s : symmetries) out.push_back(s.iso);
  return out;
}

Isometry3 fit_rigid(const std::vector<Vec3>& p, const std::vector<Vec3>& q, int det_sign) {
  Vec3 pc = Vec3::Zero(), qc = Vec3::Zero();
  for (const auto& v : p) pc += v;
  for (const auto& v : q) qc += v;
  pc /= static_cast<double>(p.size());
  qc /= static_cast<double>(q.size());
  Mat3 H = Mat3::Zero();
  for (size_t i = 0; i < p.size(); ++i) H += (p[i] - pc) * (q[i] - qc).transpose();
  Eigen::JacobiSVD<Mat3> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 U = svd.matrixU(), V = svd.matrixV();
  Mat3 R = V * U.transpose();
  if (det_sign != 0 && R.determinant() * det_sign < 0.0) {
    // Flip the weakest direction to land on the requested component of O(3).
    Mat3 D = Mat3::Identity();
    D(2, 2) = -1.0;
    R = V * D * U.transpose();
  }
  Isometry3 iso;
  iso.rotation = R;
  iso.translation = qc - R * pc;
  return iso;
}

double registration_residual(const Isometry3& iso, const std::vector<Vec3>& p,
                             const std::vector<Vec3>& q) {
  double worst = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    worst = std::max(worst, (iso.apply(p[i]) - q[i]).norm());
  return worst;
}

ShiftCandidates periodic_shift_candidates(const std::vector<double>& values, double length,
                                          double flat_tol) {
  ShiftCandidates out;
  const int n = static_cast<int>(values.size());
  const double h = length / n;
  double vmin = values[0], vmax = values[0];
  for (double v : values) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (vmax - vmin < flat_tol) {
    out.constant = true;
    return out;
  }
  // Choose the regular value at the sample of steepest variation, then gather
  // all crossings of that level (linearly interpolated between samples).
  int steepest = 0;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double slope = std::abs(values[(i + 1) % n] - values[(i + n - 1) % n]);
    if (slope > best) {
      best = slope;
      steepest = i;
    }
  }
  const double level = values[steepest];
  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    const double a = values[i] - level, b = values[(i + 1) % n] - level;
    if (a == 0.0) roots.push_back(i * h);
    if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0))
      roots.push_back((i + a / (a - b)) * h);
  }
  if (roots.empty()) return out;
  auto wrap = [&](double d) {
    d = std::fmod(d, length);
    if (d < 0) d += length;
    return d;
  };
  const double x0 = roots.front();
  for (double x : roots) {
    out.forward.push_back(wrap(x - x0));
    out.backward.push_back(wrap(x + x0));
  }
  // sigma = -1, d = 0 is always worth testing.
  out.backward.push_back(0.0);
  auto dedup = [&](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [&](double a, double b) { return std::abs(a - b) < 1e-9 * length; }),
            v.end());
  };
  dedup(out.forward);
  dedup(out.backward);
  // d = 0 with sigma = +1 is the identity action, not a symmetry candidate.
  if (!out.forward.empty() && out.forward.front() < 1e-9 * length)
    out.forward.erase(out.forward.begin());
  return out;
}

namespace {

PlaneEstimate fit_plane(const std::vector<Vec3>& pts, double& rms) {
  Vec3 centroid = Vec3::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(pts.size());
  Mat3 cov = Mat3::Zero();
  for (const auto& p : pts) cov += (p - centroid) * (p - centroid).transpose();
  Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
  PlaneEstimate pe;
  pe.point = centroid;
  pe.normal = eig.eigenvectors().col(0);
  double acc = 0.0;
  for (const auto& p : pts) {
    const double d = (p - centroid).dot(pe.normal);
    acc += d * d;
  }
  rms = std::sqrt(acc / pts.size());
  return pe;
}

// Positions c(sigma s + d), spline interpolated for off-grid shifts.
std::vector<Vec3> remapped_positions(const SpaceCurve& c, const CurveInterpolator& interp,
                                     int sigma, double d) {
  std::vector<Vec3> out(c.size());
  for (int i = 0; i < c.size(); ++i) {
    double target = sigma * c.s[i] + d;
    out[i] = interp.position(target);
  }
  return out;
}

}  // namespace

CurveSymmetryReport detect_curve_symmetries(const SpaceCurve& c, const Tolerances& tol) {
  CurveSymmetryReport rep;
  const int n = c.size();
  const double l = c.length;
  const double accept = tol.tol_sym_rel * l;

  double tau_sup = 0.0, kap_min = c.kappa[0], kap_max = c.kappa[0];
  for (int i = 0; i < n; ++i) {
    tau_sup = std::max(tau_sup, std::abs(c.tau[i]));
    kap_min = std::min(kap_min, c.kappa[i]);
    kap_max = std::max(kap_max, c.kappa[i]);
  }
  double plane_rms = 0.0;
  PlaneEstimate plane = fit_plane(c.point, plane_rms);
  rep.is_planar = tau_sup < tol.tol_tau && plane_rms < tol.tol_plane_rel * l;
  if (rep.is_planar) {
    rep.plane = plane;
    CurveSymmetry triv;
    triv.trivial = true;
    triv.iso.rotation = Mat3::Identity() - 2.0 * plane.normal * plane.normal.transpose();
    triv.iso.translation = plane.point - triv.iso.rotation * plane.point;
    triv.action = ParamAction{1, 0.0};
    rep.trivial_symmetry = triv;
    rep.has_trivial_symmetry = true;
  }
  rep.is_circle = rep.is_planar && c.closed && (kap_max - kap_min) < tol.tol_kappa_var;
  if (rep.is_circle) {
    rep.infinite = true;
    return rep;
  }

  auto record = [&](const Isometry3& iso, int sigma, double d) {
    bool dup = false;
    for (const auto& s : rep.symmetries)
      if ((s.iso.rotation - iso.rotation).cwiseAbs().maxCoeff() < 1e-6 &&
          (s.iso.translation - iso.translation).norm() < 1e-6 * l)
        dup = true;
    if (!dup) {
      CurveSymmetry sym;
      sym.iso = iso;
      sym.action = ParamAction{sigma, d};
      rep.symmetries.push_back(sym);
    }
  };

  if (!c.closed) {
    // Endpoint-swapping action only: s -> -s.
    std::vector<Vec3> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = c.point[n - 1 - i];
    for (int det : {1, -1}) {
      Isometry3 iso = fit_rigid(c.point, rev, det);
      if (registration_residual(iso, c.point, rev) < accept) record(iso, -1, 0.0);
    }
  } else {
    CurveInterpolator interp(c);
    auto residual_at = [&](int sigma, int det, double d, Isometry3* iso_out) {
      const std::vector<Vec3> targets = remapped_positions(c, interp, sigma, d);
      Isometry3 iso = fit_rigid(c.point, targets, det);
      if (iso_out) *iso_out = iso;
      return registration_residual(iso, c.point, targets);
    };
    auto try_action = [&](int sigma, double d0, double window) {
      for (int det : {1, -1}) {
        if (residual_at(sigma, det, d0, nullptr) > 100.0 * accept) continue;
        // Golden-section polish of the shift estimate.
        double a = d0 - window, b = d0 + window;
        const double gr = 0.6180339887498949;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = residual_at(sigma, det, x1, nullptr);
        double f2 = residual_at(sigma, det, x2, nullptr);
        for (int it = 0; it < 40; ++it) {
          if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = residual_at(sigma, det, x1, nullptr);
          } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = residual_at(sigma, det, x2, nullptr);
          }
        }
        double d = 0.5 * (a + b);
        Isometry3 iso;
        const double res = residual_at(sigma, det, d, &iso);
        if (res < accept) {
          double dw = std::fmod(d, l);
          if (dw < 0) dw += l;
          if (!(det == 1 && sigma == 1 && (dw < 1e-9 * l || l - dw < 1e-9 * l)))
            record(iso, sigma, dw);
        }
      }
    };
    ShiftCandidates cand = periodic_shift_candidates(c.kappa, l, tol.tol_kappa_var);
    double window = 2.0 * c.step();
    if (cand.constant) {
      // Constant curvature: fall back to torsion, then to a coarse shift grid.
      cand = periodic_shift_candidates(c.tau, l, tol.tol_kappa_var);
      if (cand.constant) {
        cand.forward.clear();
        cand.backward.clear();
        for (int k = 1; k < 64; ++k) cand.forward.push_back(k * l / 64.0);
        for (int k = 0; k < 64; ++k) cand.backward.push_back(k * l / 64.0);
        cand.constant = false;
        window = l / 128.0;
      }
    }
    for (double d : cand.forward) try_action(1, d, window);
    for (double d : cand.backward) try_action(-1, d, window);
  }

  for (const auto& s : rep.symmetries) {
    if (s.sign() > 0)
      rep.has_positive_symmetry = true;
    else
      rep.has_negative_symmetry = true;
  }
  return rep;
}

}  // namespace curvefold
