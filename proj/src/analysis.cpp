#include "curvefold/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "curvefold/kernels.hpp"
#include "curvefold/stencil.hpp"

namespace curvefold {

namespace {
constexpr double kPi = 3.14159265358979323846;

double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}
}  // namespace

FunctionSymmetryReport mu_symmetry(const std::vector<double>& mu, double length, bool torus,
                                   const Tolerances& tol) {
  FunctionSymmetryReport rep;
  rep.domain = torus ? DomainKind::Torus : DomainKind::Interval;
  const int n = static_cast<int>(mu.size());
  const double scale = std::max(1.0, sup_abs(mu));
  const double accept = tol.tol_musym * scale;

  if (!torus) {
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(mu[i] - mu[n - 1 - i]));
    rep.best_residual = res;
    if (res < accept) {
      rep.has_symmetry = true;
      rep.actions.push_back({-1, 0.0, res});
    }
    return rep;
  }

  double vmin = mu[0], vmax = mu[0];
  for (double v : mu) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (vmax - vmin < accept) {
    rep.infinite = true;
    rep.has_symmetry = true;
    rep.best_residual = vmax - vmin;
    return rep;
  }

  ScalarInterpolator interp(mu, length, true);
  auto residual = [&](int sigma, double d) {
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = i * length / n;
      res = std::max(res, std::abs(interp.eval(sigma * s + d) - mu[i]));
    }
    return res;
  };
  auto refine = [&](int sigma, double d0, double window) {
    const double gr = 0.6180339887498949;
    double a = d0 - window, b = d0 + window;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = residual(sigma, x1), f2 = residual(sigma, x2);
    for (int it = 0; it < 40; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = residual(sigma, x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = residual(sigma, x2);
      }
    }
    return 0.5 * (a + b);
  };

  ShiftCandidates cand = periodic_shift_candidates(mu, length, accept);
  rep.best_residual = 1e300;
  const double window = 2.0 * length / n;
  auto consider = [&](int sigma, double d0) {
    if (residual(sigma, d0) > 100.0 * accept) return;
    double d = refine(sigma, d0, window);
    const double res = residual(sigma, d);
    rep.best_residual = std::min(rep.best_residual, res);
    if (res < accept) {
      double dw = std::fmod(d, length);
      if (dw < 0) dw += length;
      if (sigma == 1 && (dw < 1e-9 * length || length - dw < 1e-9 * length)) return;
      for (const auto& a : rep.actions)
        if (a.sigma == sigma && std::abs(a.d - dw) < 1e-6 * length) return;
      rep.actions.push_back({sigma, dw, res});
    }
  };
  for (double d : cand.forward) consider(1, d);
  for (double d : cand.backward) consider(-1, d);
  if (rep.best_residual > 1e299) rep.best_residual = residual(-1, 0.0);
  rep.has_symmetry = !rep.actions.empty();
  return rep;
}

const char* theorem_case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::B1_no_symmetries: return "B1_no_symmetries";
    case TheoremCase::B2_le_two: return "B2_le_two";
    case TheoremCase::B3a_planar_nontrivial: return "B3a_planar_nontrivial";
    case TheoremCase::B3b_planar_mu_sym: return "B3b_planar_mu_sym";
    case TheoremCase::B3c_positive_sym_mu_sym: return "B3c_positive_sym_mu_sym";
  }
  return "unknown";
}

bool right_equivalent(const DevelopableStrip& a, const DevelopableStrip& b,
                      const Tolerances& tol) {
  const int n = a.size();
  if (b.size() != n || a.crease.closed != b.crease.closed) return false;
  const double ptol = 10.0 * tol.tol_len_rel * a.length();
  const double atol = std::max(tol.tol_beta, 1e-9);
  auto rev = [&](int i) { return a.crease.closed ? (n - i) % n : n - 1 - i; };
  auto same_points = [&](bool reversed) {
    for (int i = 0; i < n; i += std::max(1, n / 32)) {
      const int j = reversed ? rev(i) : i;
      if ((a.crease.point[i] - b.crease.point[j]).norm() > ptol) return false;
    }
    return true;
  };
  if (same_points(false)) {
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(a.alpha[i] - b.alpha[i]));
    if (res < atol) return true;
  }
  if (same_points(true)) {
    // a = b^sharp: alpha_a(s) = -alpha_b(-s).
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(a.alpha[i] + b.alpha[rev(i)]));
    if (res < atol) return true;
  }
  return false;
}

namespace {

std::vector<Vec3> strip_test_points(const DevelopableStrip& f, int max_rows) {
  const int n = f.size();
  const int stride = std::max(1, n / max_rows);
  const double eps = f.width;
  std::vector<Vec3> pts;
  pts.reserve((n / stride + 1) * 5);
  for (int i = 0; i < n; i += stride) {
    for (double v : {-eps, -0.5 * eps, 0.0, 0.5 * eps, eps})
      pts.push_back(f.crease.point[i] + v * f.xi[i]);
  }
  return pts;
}

}  // namespace

bool strips_congruent(const DevelopableStrip& a, const DevelopableStrip& b,
                      const std::vector<Isometry3>& candidates, const Tolerances& tol) {
  const double cutoff = tol.tol_sym_rel * a.length();
  const std::vector<Vec3> pa = strip_test_points(a, 256);
  const std::vector<Vec3> pb = strip_test_points(b, 256);
  StripSampler sa(a), sb(b);
  const double eps = a.width;
  for (const auto& T : candidates) {
    std::vector<Vec3> moved(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) moved[i] = T.apply(pa[i]);
    if (kernels::max_distance_to_strip(moved, sb, -eps, eps, cutoff) > cutoff) continue;
    const Isometry3 inv = T.inverse();
    std::vector<Vec3> back(pb.size());
    for (size_t i = 0; i < pb.size(); ++i) back[i] = inv.apply(pb[i]);
    if (kernels::max_distance_to_strip(back, sa, -eps, eps, cutoff) > cutoff) continue;
    return true;
  }
  return false;
}

std::vector<std::vector<bool>> congruence_matrix(const std::vector<const DevelopableStrip*>& strips,
                                                 const std::vector<Isometry3>& candidates,
                                                 const Tolerances& tol) {
  const int m = static_cast<int>(strips.size());
  std::vector<std::vector<bool>> mat(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) mat[i][i] = true;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      mat[i][j] = mat[j][i] = strips_congruent(*strips[i], *strips[j], candidates, tol);
  return mat;
}

namespace {

int count_classes(const std::vector<std::vector<bool>>& mat, std::vector<int>* class_of) {
  const int m = static_cast<int>(mat.size());
  std::vector<int> cls(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (int j = i + 1; j < m; ++j)
      if (mat[i][j]) cls[j] = next;
    ++next;
  }
  if (class_of) *class_of = cls;
  return next;
}

}  // namespace

CongruenceReport classify_quartet(const DevelopableStrip& F, const Tolerances& tol) {
  if (F.crease.closed)
    fail(ErrorCode::NotInterval, "quartet classification applies to interval creases");
  if (!is_admissible(F, tol)) fail(ErrorCode::NotAdmissible, "strip is not admissible");

  CongruenceReport rep;
  rep.curve_symmetries = detect_curve_symmetries(F.crease, tol);
  rep.mu_symmetries = mu_symmetry(F.mu, F.length(), false, tol);

  const bool mu_sym = rep.mu_symmetries.has_symmetry;
  const auto& cs = rep.curve_symmetries;
  const bool curve_has_sym = cs.has_any_symmetry();

  rep.n_right_classes = mu_sym ? 2 : 4;

  if (!curve_has_sym && !mu_sym) {
    rep.satisfied_cases.push_back(TheoremCase::B1_no_symmetries);
    rep.n_congruence_classes = 4;
  } else {
    if (cs.is_planar && (cs.has_positive_symmetry || cs.has_negative_symmetry))
      rep.satisfied_cases.push_back(TheoremCase::B3a_planar_nontrivial);
    if (cs.is_planar && mu_sym)
      rep.satisfied_cases.push_back(TheoremCase::B3b_planar_mu_sym);
    if (cs.has_positive_symmetry && mu_sym)
      rep.satisfied_cases.push_back(TheoremCase::B3c_positive_sym_mu_sym);
    rep.n_congruence_classes = rep.satisfied_cases.empty() ? 2 : 1;
    if (rep.satisfied_cases.empty()) rep.satisfied_cases.push_back(TheoremCase::B2_le_two);
  }
  rep.fired_case = rep.satisfied_cases.front();

  IsomerQuartet q = make_quartet(F, tol);

  // Independent check of the right-equivalence count.
  {
    std::vector<std::vector<bool>> req(4, std::vector<bool>(4, false));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) req[i][j] = i == j || right_equivalent(q[i], q[j], tol);
    const int nr = count_classes(req, nullptr);
    if (nr != rep.n_right_classes)
      rep.evidence.push_back("right-equivalence count disagrees with the mu-symmetry rule");
    rep.n_right_classes = nr;
  }

  const std::vector<Isometry3> candidates = cs.congruence_candidates();
  std::vector<const DevelopableStrip*> ptrs = {&q.f, &q.f_dual, &q.f_inv, &q.f_inv_dual};
  auto mat = congruence_matrix(ptrs, candidates, tol);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rep.pairwise[i][j] = mat[i][j];
  rep.oracle_classes = count_classes(mat, nullptr);
  rep.oracle_agrees = rep.oracle_classes == rep.n_congruence_classes;

  rep.evidence.push_back(std::string("curve: ") + (cs.is_planar ? "planar" : "non-planar") +
                         ", positive symmetries: " + (cs.has_positive_symmetry ? "yes" : "no") +
                         ", negative: " + (cs.has_negative_symmetry ? "yes" : "no") +
                         ", trivial: " + (cs.has_trivial_symmetry ? "yes" : "no"));
  rep.evidence.push_back(std::string("mu symmetry: ") + (mu_sym ? "yes" : "no"));
  return rep;
}

MidpointVerdict midpoint_criterion(const DevelopableStrip& F, const Tolerances& tol) {
  if (F.crease.closed) fail(ErrorCode::NotInterval, "midpoint criterion needs an interval crease");
  const auto rep = detect_curve_symmetries(F.crease, tol);
  if (rep.is_planar) fail(ErrorCode::PlanarCurve, "midpoint criterion assumes a non-planar crease");
  const double l = F.length();
  const double h = F.crease.step();
  const auto dk = stencil::d1(F.crease.kappa, h, false);
  const auto dm = stencil::d1(F.mu, h, false);
  ScalarInterpolator ik(dk, l, false), im(dm, l, false);
  const double thresh = tol.tol_deriv_rel / l;
  if (std::abs(ik.eval(0.0)) > thresh && std::abs(im.eval(0.0)) > thresh)
    return MidpointVerdict::N_is_4;
  return MidpointVerdict::Inconclusive;
}

MeanCurvatureTorsionResult equal_mean_curvature_torsion(
    const std::function<double(double)>& kappa, const std::function<double(double)>& alpha,
    double l, int n, const Tolerances& tol) {
  if (n <= 0) n = defaults().resolution;
  if (n % 2 == 0) ++n;  // odd sample count keeps s = 0 on the grid

  {
    const double h0 = 1e-5 * l;
    const double dk0 = (kappa(h0) - kappa(-h0)) / (2.0 * h0);
    const double da0 = (alpha(h0) - alpha(-h0)) / (2.0 * h0);
    if (!(dk0 < 0.0))
      fail(ErrorCode::PreconditionFailed, "kappa'(0) must be negative");
    if (da0 < -1e-9)
      fail(ErrorCode::PreconditionFailed, "alpha'(0) must be non-negative");
  }

  std::string last_problem = "discriminant negative";
  for (int attempt = 0; attempt <= 10; ++attempt, l *= 0.5) {
    const double h = l / (n - 1);
    std::vector<double> kap(n), alp(n), A(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const double s = -0.5 * l + i * h;
      kap[i] = kappa(s);
      alp[i] = alpha(s);
      if (!(kap[i] > tol.tol_kappa)) {
        ok = false;
        last_problem = "kappa not positive";
      }
      if (!(alp[i] > 0.0 && alp[i] < 0.5 * kPi))
        fail(ErrorCode::PreconditionFailed, "alpha must take values in (0, pi/2)");
    }
    if (ok) {
      for (int i = 0; i < n; ++i) {
        const double r = kap[n - 1 - i] * std::cos(alp[n - 1 - i]) / kap[i];
        if (!(r > 0.0 && r < 1.0)) {
          ok = false;
          last_problem = "reversed curve incompatible on this interval";
          break;
        }
        A[i] = std::acos(r);
      }
    }
    std::vector<double> tau(n), B0v(n), B1v(n), B2v(n);
    if (ok) {
      const auto dalp = stencil::d1(alp, h, false);
      const auto dA = stencil::d1(A, h, false);
      for (int i = 0; i < n; ++i) {
        const double csc_a = 1.0 / std::sin(alp[i]), csc_A = 1.0 / std::sin(A[i]);
        const double sa = std::sin(alp[i]), sA = std::sin(A[i]);
        B0v[i] = csc_a - csc_A;
        B1v[i] = dalp[i] * csc_a - dA[i] * csc_A;
        B2v[i] = (dalp[i] * dalp[i] + kap[i] * kap[i] * sa * sa) * csc_a -
                 (dA[i] * dA[i] + kap[i] * kap[i] * sA * sA) * csc_A;
        const double disc = B1v[i] * B1v[i] - B0v[i] * B2v[i];
        if (disc < 0.0 || B1v[i] + std::sqrt(std::max(disc, 0.0)) <= 0.0) {
          ok = false;
          last_problem = "discriminant negative at s = " + std::to_string(-0.5 * l + i * h);
          break;
        }
        tau[i] = -B2v[i] / (B1v[i] + std::sqrt(disc));
      }
    }
    if (!ok) continue;

    ScalarInterpolator tint(tau, l, false);
    SpaceCurve C = curve_from_kappa_tau(kappa, [&](double s) { return tint.eval(s); }, l,
                                        FrenetFrame{}, false, n, tol);
    DevelopableStrip F = build_strip_from_samples(C, alp, 0.0, tol);
    if (!is_admissible(F, tol)) {
      last_problem = "strip not admissible on this interval";
      continue;
    }
    MeanCurvatureTorsionResult out;
    out.length_used = l;
    out.tau = tau;
    out.curve = C;
    out.F = F;
    out.F1 = reverse_strip(inverse_dual(F, tol), tol);
    out.tau_at_zero = tau[(n - 1) / 2];
    const auto HF = mean_curvature_along_crease(out.F);
    const auto H1 = mean_curvature_along_crease(out.F1);
    for (int i = 0; i < n; ++i) {
      out.max_H_residual = std::max(out.max_H_residual, std::abs(HF[i] - H1[i]));
      out.max_quadratic_residual =
          std::max(out.max_quadratic_residual,
                   std::abs(B0v[i] * tau[i] * tau[i] + 2.0 * B1v[i] * tau[i] + B2v[i]));
    }
    return out;
  }
  fail(ErrorCode::NegativeDiscriminant, last_problem);
}

ClosedCensus classify_closed(const DevelopableStrip& F, int grid_b, const Tolerances& tol) {
  if (!F.crease.closed) fail(ErrorCode::NotClosed, "census needs a closed crease");
  if (!is_admissible(F, tol)) fail(ErrorCode::NotAdmissible, "census needs an admissible strip");
  const auto cs = detect_curve_symmetries(F.crease, tol);
  if (cs.is_circle)
    fail(ErrorCode::CircleCrease, "circle creases carry a rotational continuum; census skipped");

  ClosedCensus out;
  const double l = F.length();
  for (int k = 0; k < grid_b; ++k)
    for (int i = 1; i <= 4; ++i) out.members.push_back(closed_family(F, i, k * l / grid_b, tol));

  const auto mu_rep = mu_symmetry(F.mu, l, true, tol);
  out.curve_symmetry_count = static_cast<int>(cs.symmetries.size());
  out.mu_action_count = static_cast<int>(mu_rep.actions.size());

  std::vector<const DevelopableStrip*> ptrs;
  for (const auto& m : out.members) ptrs.push_back(&m.strip);
  out.congruent = congruence_matrix(ptrs, cs.congruence_candidates(), tol);
  out.n_classes = count_classes(out.congruent, &out.class_of);

  if (!mu_rep.infinite) {
    const int bound = 4 * (out.curve_symmetry_count + 1) * (out.mu_action_count + 1);
    std::vector<int> sizes(out.n_classes, 0);
    for (int c : out.class_of) sizes[c]++;
    for (int s : sizes)
      if (s > bound) out.class_sizes_bounded = false;
  }
  out.all_distinct = out.n_classes == static_cast<int>(out.members.size());
  return out;
}

}  // namespace curvefold
