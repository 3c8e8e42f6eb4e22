// Acceptance suite: runs the headline reproductions end to end and prints
// one pass/fail line per criterion.  Exit code = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "curvefold/analysis.hpp"
#include "curvefold/examples.hpp"
#include "curvefold/io.hpp"
#include "curvefold/kernels.hpp"
#include "curvefold/stencil.hpp"
#include "fixtures.hpp"

using namespace curvefold;
namespace chrono = std::chrono;

namespace {

constexpr double kPi = 3.14159265358979323846;
int failures = 0;

void report(int k, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", k, detail.c_str());
  if (!pass) ++failures;
}

template <class F>
void criterion(int k, const F& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(k, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

DevelopableStrip arctan_strip(int n) {
  return build_strip(make_space_example("arctan_curve", {}, n),
                     [](double u) { return kPi * (u + 10.0) / 24.0; });
}

// Points of an origami map's image (upper half-band of the strip plus lower
// half-band of its dual), outside the crease tube.
std::vector<Vec3> origami_points(const DevelopableStrip& upper, const DevelopableStrip& lower,
                                 double eps, double tube, int stride) {
  std::vector<Vec3> pts;
  for (int i = 0; i < upper.size(); i += stride) {
    for (double v : {0.25 * eps, 0.5 * eps, 0.75 * eps, eps}) {
      if (v > tube) pts.push_back(upper.crease.point[i] + v * upper.xi[i]);
      if (v > tube) pts.push_back(lower.crease.point[i] - v * lower.xi[i]);
    }
  }
  return pts;
}

double origami_directed_hausdorff(const DevelopableStrip& ui, const DevelopableStrip& li,
                                  const DevelopableStrip& uj, const DevelopableStrip& lj,
                                  double eps, double tube) {
  StripSampler su(uj), sl(lj);
  double worst = 0.0;
  for (const Vec3& p : origami_points(ui, li, eps, tube, 8)) {
    const double d = std::min(kernels::point_to_strip_distance(p, su, 0.0, eps),
                              kernels::point_to_strip_distance(p, sl, -eps, 0.0));
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace

int main() {
  const Tolerances tol;

  criterion(1, [&] {
    const auto t0 = chrono::steady_clock::now();
    const int n = 2048;
    DevelopableStrip F = arctan_strip(n);
    CongruenceReport rep = classify_quartet(F, tol);
    const double secs = chrono::duration<double>(chrono::steady_clock::now() - t0).count();

    const double paper_value =
        -(96.0 * std::sin(kPi / 16.0) + 5.0 * kPi * std::cos(kPi / 16.0)) / (75.0 * std::sqrt(2.0));
    // Closed form of mu'(1/2) for mu(u) = sqrt(2) cos(pi(u+10)/24) / (1+u^2).
    auto mu_prime = [](double u) {
      const double a = kPi * (u + 10.0) / 24.0, da = kPi / 24.0, q = 1.0 + u * u;
      return std::sqrt(2.0) * (-da * std::sin(a) * q - 2.0 * u * std::cos(a)) / (q * q);
    };
    const double analytic = mu_prime(0.5);
    const auto dmu = stencil::d1(F.mu, F.crease.step(), false);
    ScalarInterpolator dmi(dmu, F.length(), false);
    const double measured = dmi.eval(0.0);  // centered midpoint = native u = 1/2

    const bool pass = rep.n_right_classes == 4 && rep.n_congruence_classes == 4 &&
                      rep.oracle_agrees && std::abs(analytic - paper_value) < 1e-9 &&
                      std::abs(measured - paper_value) < 1e-5 && secs < 5.0;
    report(1, pass,
           fmt("arctan-curve quartet: n=4, N=4, mu'(1/2) analytic err %.1e, fd err %.1e", 
               std::abs(analytic - paper_value), std::abs(measured - paper_value)) +
               fmt(", %.2f s", secs));
  });

  criterion(2, [&] {
    const int n = 1024;
    SpaceCurve c = make_space_example("quarter_circle", {}, n);
    DevelopableStrip F = build_strip(c, [](double s) { return 0.25 * kPi - 0.5 * s; });
    IsomerQuartet q = make_quartet(F, tol);
    int classes = 0;
    bool merged[4] = {};
    for (int i = 0; i < 4; ++i) {
      if (merged[i]) continue;
      ++classes;
      for (int j = i + 1; j < 4; ++j)
        if (right_equivalent(q[i], q[j], tol)) merged[j] = true;
    }
    // The four origami maps as point sets: min pairwise directed Hausdorff
    // away from the crease tube.
    const double eps = F.width, tube = tol.tol_sym_rel * c.length;
    std::vector<DevelopableStrip> uppers, lowers;
    for (int i = 0; i < 4; ++i) {
      uppers.push_back(q[i]);
      lowers.push_back(dual(q[i], tol));
    }
    double min_hd = 1e300;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        min_hd = std::min(min_hd, origami_directed_hausdorff(uppers[i], lowers[i], uppers[j],
                                                             lowers[j], eps, tube));
      }
    const bool pass = classes == 4 && min_hd > 10.0 * tube;
    report(2, pass,
           fmt("quarter-circle foldings: right classes %.0f, min pairwise Hausdorff %.2e "
               "(> %.1e required)",
               double(classes), min_hd, 10.0 * tube));
  });

  criterion(3, [&] {
    const int n = 1024;
    SpaceCurve c = make_space_example("helix", {}, n);
    DevelopableStrip F = build_strip(c, [](double) { return 0.9; });
    DevelopableStrip Fd = dual(F, tol);
    Mat3 R;
    R << 1, 0, 0, 0, -1, 0, 0, 0, -1;  // 180 degrees about the normal line at s = 0
    Isometry3 T;
    T.rotation = R;
    StripSampler sd(Fd);
    std::vector<Vec3> pts;
    for (int i = 0; i < n; i += 4)
      for (double v : {-F.width, 0.0, F.width}) pts.push_back(T.apply(c.point[i] + v * F.xi[i]));
    const double resid = kernels::max_distance_to_strip(pts, sd, -F.width, F.width, -1.0);
    CongruenceReport rep = classify_quartet(F, tol);
    const bool pass = resid < tol.tol_sym_rel * c.length && rep.n_right_classes == 2;
    report(3, pass, fmt("helix: dual = 180-degree rotation, residual %.2e; n = %.0f", resid,
                        double(rep.n_right_classes)));
  });

  criterion(4, [&] {
    auto battery = fixtures::battery(1024);
    int agree = 0;
    std::string bad;
    for (const auto& fx : battery) {
      CongruenceReport rep = classify_quartet(fx.strip, tol);
      if (rep.oracle_agrees && rep.n_congruence_classes == fx.expected_congruence &&
          rep.n_right_classes == fx.expected_right)
        ++agree;
      else
        bad += " [" + fx.name + "]";
    }
    const bool pass = agree == static_cast<int>(battery.size()) && battery.size() >= 12;
    report(4, pass,
           fmt("fixture battery: decision tree vs registration oracle agree on %.0f/%.0f",
               double(agree), double(battery.size())) + bad);
  });

  criterion(5, [&] {
    double worst_beta = 0.0;
    bool involutions = true, mu_exact = true;
    for (const auto& fx : fixtures::battery(1024)) {
      IsomerQuartet q = make_quartet(fx.strip, tol);
      DevelopableStrip dd = dual(q.f_dual, tol);
      DevelopableStrip rr = reverse_strip(reverse_strip(fx.strip, tol), tol);
      const int n = fx.strip.size();
      for (int i = 0; i < n; ++i) {
        involutions = involutions && dd.alpha[i] == fx.strip.alpha[i] &&
                      rr.alpha[i] == fx.strip.alpha[i];
        mu_exact = mu_exact && q.f_dual.mu[i] == fx.strip.mu[i] &&
                   q.f_inv.mu[i] == fx.strip.mu[i] && q.f_inv_dual.mu[i] == fx.strip.mu[i];
      }
      DevelopableStrip rev = reverse_strip(fx.strip, tol);
      for (int i = 0; i < n; ++i) mu_exact = mu_exact && rev.mu[i] == fx.strip.mu[n - 1 - i];
      for (int k = 0; k < 4; ++k)
        for (double r : beta_identity_residual(q[k])) worst_beta = std::max(worst_beta, r);
    }
    const bool pass = involutions && mu_exact && worst_beta < 1e-6;
    report(5, pass,
           fmt("involutions exact, mu preserved bitwise, max ruling-identity residual %.2e",
               worst_beta));
  });

  criterion(6, [&] {
    double worst = 0.0;
    for (const auto& fx : fixtures::battery(1024)) {
      IsomerQuartet q = make_quartet(fx.strip, tol);
      for (int k = 0; k < 4; ++k)
        worst = std::max(worst, sample_mesh(q[k], 0, 1.0, -1.0, tol).max_angle_defect);
    }
    SpaceCurve torus = make_space_example("torus_curve", {}, 1024);
    DevelopableStrip ft = build_strip(torus, [](double) { return 0.9; });
    worst = std::max(worst, sample_mesh(ft, 0, 1.0, -1.0, tol).max_angle_defect);
    report(6, worst < 1e-6, fmt("max discrete angle defect over all meshes %.2e", worst));
  });

  criterion(7, [&] {
    bool ok = true;
    std::string bad;
    for (const auto& fx : fixtures::battery(512)) {
      IsomerQuartet q = make_quartet(fx.strip, tol);
      auto r1 = strips_intersect_only_along_crease(q.f, q.f_dual, fx.strip.width, tol);
      auto r2 = strips_intersect_only_along_crease(q.f, q.f_inv, fx.strip.width, tol);
      if (!r1.only_along_crease || !r2.only_along_crease) {
        ok = false;
        bad += " [" + fx.name + "]";
      }
    }
    report(7, ok, "strip pairs (F, dual) and (F, inverse) meet only inside the crease tube" + bad);
  });

  criterion(8, [&] {
    SpaceCurve ph = make_space_example("perturbed_helix", {{"d", 0.1}}, 1025);
    ScalarInterpolator kint(ph.kappa, ph.length, false);
    auto sol = equal_mean_curvature_torsion([&](double s) { return kint.eval(s); },
                                            [](double) { return kPi / 3.0; }, ph.length, 1025,
                                            tol);
    const int n = sol.F.size();
    const int mid = (n - 1) / 2;
    const auto dA = stencil::d1(sol.F1.alpha, sol.F.crease.step(), false);
    const double a0 = sol.F.alpha[mid], A0 = sol.F1.alpha[mid];
    const double da0 = sol.F.dalpha[mid], dA0 = dA[mid];
    const double k0 = sol.curve.kappa[mid];
    const double B1 = da0 / std::sin(a0) - dA0 / std::sin(A0);
    const double B2 = (da0 * da0 + k0 * k0 * std::sin(a0) * std::sin(a0)) / std::sin(a0) -
                      (dA0 * dA0 + k0 * k0 * std::sin(A0) * std::sin(A0)) / std::sin(A0);
    const double tau0_err = std::abs(sol.tau_at_zero + B2 / (2.0 * B1));
    CongruenceReport rep = classify_quartet(sol.F, tol);
    const bool pass = sol.max_quadratic_residual < 1e-6 && tau0_err < 1e-9 &&
                      rep.n_congruence_classes == 4 && rep.oracle_agrees &&
                      sol.max_H_residual < 1e-6;
    report(8, pass,
           fmt("torsion solver: quadratic residual %.1e, tau(0) limit err %.1e, N = %.0f",
               sol.max_quadratic_residual, tau0_err, double(rep.n_congruence_classes)));
  });

  criterion(9, [&] {
    const auto t0 = chrono::steady_clock::now();
    const int n = 2048;
    SpaceCurve c = make_space_example("torus_curve", {}, n);
    PlaneCurve gen = make_plane_example("ellipse", {}, n);
    const double k = c.length / gen.length;
    const double k_err = std::abs(k - 3.31) / 3.31;
    double kap_min = 1e300;
    for (double kv : c.kappa) kap_min = std::min(kap_min, kv);
    const bool precheck = kap_min > 2.0 * kPi / c.length;

    ScalarInterpolator gmu(gen.mu, gen.length, true);
    std::vector<double> mu(n), alpha(n);
    for (int i = 0; i < n; ++i) {
      mu[i] = gmu.eval(c.s[i] / k) / k;
      alpha[i] = std::acos(mu[i] / c.kappa[i]);
    }
    DevelopableStrip F = build_strip_from_samples(c, alpha, 0.0, tol, mu);

    // The three base-point shifts: 0, 1/8, 1/4 (absolute arc length).
    std::vector<ClosedFamilyMember> picked = {closed_family(F, 1, 0.0, tol),
                                              closed_family(F, 1, 0.125, tol),
                                              closed_family(F, 1, 0.25, tol)};
    auto cs = detect_curve_symmetries(c, tol);
    std::vector<const DevelopableStrip*> ptrs;
    for (const auto& m : picked) ptrs.push_back(&m.strip);
    auto mat = congruence_matrix(ptrs, cs.congruence_candidates(), tol);
    const bool distinct = !mat[0][1] && !mat[0][2] && !mat[1][2];

    ClosedCensus census = classify_closed(F, 8, tol);
    const double secs = chrono::duration<double>(chrono::steady_clock::now() - t0).count();
    const bool pass =
        k_err < 0.005 && precheck && distinct && census.class_sizes_bounded && secs < 60.0;
    report(9, pass,
           fmt("closed census: k = %.4f (err %.2f%%), min kappa %.3f > 2pi/L, ", k,
               100.0 * k_err, kap_min) +
               fmt("shifts {0, 1/8, 1/4} distinct, %.0f members / %.0f classes, %.1f s",
                   double(census.members.size()), double(census.n_classes), secs));
  });

  criterion(10, [&] {
    double worst = 0.0;
    for (const auto& fx : fixtures::battery(1024)) {
      PlaneCurve pattern = develop_crease_pattern(fx.strip, tol);
      PlaneCurve measured = pattern;
      measure_plane_curvature(measured);
      for (int i = 0; i < fx.strip.size(); ++i)
        worst = std::max(worst, std::abs(measured.mu[i] - fx.strip.mu[i]));
    }
    SpaceCurve circle = make_space_example("circle", {}, 1024);
    DevelopableStrip fc = build_strip(circle, [](double) { return 0.25 * kPi; });
    PlaneCurve pat = develop_crease_pattern(fc, tol);
    PlaneCurve meas = pat;
    measure_plane_curvature(meas);
    double radius_err = 0.0;
    for (double m : meas.mu) radius_err = std::max(radius_err, std::abs(m - 1.0 / std::sqrt(2.0)));
    const double len_err = std::abs(pat.length - 2.0 * kPi);
    const bool pass = worst < 1e-4 && radius_err < 1e-4 && len_err < 1e-4;
    report(10, pass,
           fmt("development round trip: max curvature error %.2e; circle pattern radius err "
               "%.2e, length err %.2e",
               worst, radius_err, len_err));
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
