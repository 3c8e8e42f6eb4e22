#include <doctest.h>

#include <cmath>

#include "curvefold/analysis.hpp"
#include "curvefold/examples.hpp"
#include "curvefold/isomers.hpp"
#include "curvefold/kernels.hpp"

using namespace curvefold;

namespace {
constexpr double kPi = 3.14159265358979323846;

DevelopableStrip arctan_strip(int n = 1024) {
  SpaceCurve c = make_space_example("arctan_curve", {}, n);
  return build_strip(c, [](double u) { return kPi * (u + 10.0) / 24.0; });
}

DevelopableStrip helix_strip(double a0 = 0.9, int n = 1024) {
  SpaceCurve c = make_space_example("helix", {}, n);
  return build_strip(c, [&](double) { return a0; });
}
}  // namespace

TEST_CASE("dual is an involution and flips alpha") {
  DevelopableStrip f = arctan_strip();
  DevelopableStrip fd = dual(f);
  DevelopableStrip fdd = dual(fd);
  for (int i = 0; i < f.size(); ++i) {
    CHECK(fd.alpha[i] == -f.alpha[i]);
    CHECK(fdd.alpha[i] == f.alpha[i]);
    CHECK(fd.mu[i] == f.mu[i]);  // shared geodesic curvature, exactly
  }
}

TEST_CASE("helix: dual equals the 180-degree rotation about the normal at s = 0") {
  DevelopableStrip f = helix_strip();
  DevelopableStrip fd = dual(f);
  Mat3 R;
  R << 1, 0, 0, 0, -1, 0, 0, 0, -1;  // the curve's positive symmetry
  const int n = f.size();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    // T c(s) = c(-s) and dT xi_F(s) = xi_dual(-s).
    worst = std::max(worst, (R * f.crease.point[i] - fd.crease.point[n - 1 - i]).norm());
    worst = std::max(worst, (R * f.xi[i] - fd.xi[n - 1 - i]).norm());
  }
  CHECK(worst < 1e-4 * f.length());
}

TEST_CASE("transplant reproduces the dual and detects incompatibility") {
  DevelopableStrip f = arctan_strip();
  DevelopableStrip g = transplant(f, f.crease, -1);
  for (int i = 0; i < f.size(); ++i) {
    CHECK(g.alpha[i] == doctest::Approx(-f.alpha[i]).epsilon(1e-12));
    CHECK(g.mu[i] == f.mu[i]);
  }
  // A target whose curvature dips below mu is rejected.
  SpaceCurve cramped = make_space_example("helix", {{"l", 0.8}}, f.size());
  DevelopableStrip wide = build_strip(f.crease, [](double) { return 0.8; });
  CHECK_THROWS_WITH_AS(transplant(wide, cramped, +1), doctest::Contains("IncompatibleCurve"),
                       GeomError);
}

TEST_CASE("transplant rejects sign-changing alpha") {
  DevelopableStrip f = helix_strip();
  DevelopableStrip broken = f;
  for (int i = 0; i < broken.size() / 2; ++i) broken.alpha[i] = -broken.alpha[i];
  CHECK_THROWS_WITH_AS(transplant(broken, f.crease, -1),
                       doctest::Contains("UnsupportedSignChange"), GeomError);
}

TEST_CASE("inverse satisfies the transplanted-curvature identity") {
  DevelopableStrip f = arctan_strip();
  REQUIRE(is_admissible(f));
  DevelopableStrip fi = inverse(f);
  DevelopableStrip fid = inverse_dual(f);
  const int n = f.size();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    // kappa(b+c-u) cos(alpha_inv(u)) = kappa(u) cos(alpha(u))
    const double lhs = f.crease.kappa[n - 1 - i] * std::cos(fi.alpha[i]);
    const double rhs = f.crease.kappa[i] * std::cos(f.alpha[i]);
    worst = std::max(worst, std::abs(lhs - rhs));
    CHECK(fi.alpha[i] * f.alpha[i] > 0.0);       // same sign
    CHECK(fid.alpha[i] == -fi.alpha[i]);
    CHECK(fi.mu[i] == f.mu[i]);
    CHECK(fid.mu[i] == f.mu[i]);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("inverse needs admissibility") {
  SpaceCurve arct = make_space_example("arctan_curve", {}, 512);
  DevelopableStrip bad = build_strip(arct, [](double) { return 0.01; });
  CHECK_FALSE(is_admissible(bad));
  CHECK_THROWS_WITH_AS(inverse(bad), doctest::Contains("NotAdmissible"), GeomError);
}

TEST_CASE("reverse strip: involution, angular functions, image set") {
  DevelopableStrip f = arctan_strip();
  DevelopableStrip fr = reverse_strip(f);
  DevelopableStrip frr = reverse_strip(fr);
  const int n = f.size();
  for (int i = 0; i < n; ++i) {
    CHECK(fr.alpha[i] == -f.alpha[n - 1 - i]);
    CHECK(frr.alpha[i] == f.alpha[i]);
    CHECK(fr.beta[i] == doctest::Approx(kPi - f.beta[n - 1 - i]).epsilon(1e-10));
  }
  // Same image set: every sampled point of one band lies on the other.
  StripSampler sr(fr);
  std::vector<Vec3> pts;
  for (int i = 0; i < n; i += 8)
    for (double v : {-f.width, 0.0, f.width}) pts.push_back(f.crease.point[i] + v * f.xi[i]);
  CHECK(kernels::max_distance_to_strip(pts, sr, -f.width, f.width, -1.0) < 1e-6 * f.length());
}

TEST_CASE("reverse of a closed strip is rejected") {
  SpaceCurve c = make_space_example("torus_curve", {}, 512);
  DevelopableStrip f = build_strip(c, [](double) { return 0.9; });
  CHECK_THROWS_WITH_AS(reverse_strip(f), doctest::Contains("TorusDomain"), GeomError);
}

TEST_CASE("quartet preserves mu exactly and keeps bands crease-disjoint") {
  DevelopableStrip f = arctan_strip();
  IsomerQuartet q = make_quartet(f);
  for (int i = 0; i < f.size(); ++i) {
    CHECK(q.f_dual.mu[i] == f.mu[i]);
    CHECK(q.f_inv.mu[i] == f.mu[i]);
    CHECK(q.f_inv_dual.mu[i] == f.mu[i]);
  }
  auto r1 = strips_intersect_only_along_crease(q.f, q.f_dual, f.width);
  CHECK(r1.only_along_crease);
  auto r2 = strips_intersect_only_along_crease(q.f, q.f_inv, f.width);
  CHECK(r2.only_along_crease);
}

TEST_CASE("mu symmetry decides right equivalence of F and its inverse dual") {
  // Symmetric case: helix with constant alpha, mu constant.
  DevelopableStrip fsym = helix_strip();
  CHECK(right_equivalent(fsym, inverse_dual(fsym)));
  CHECK(right_equivalent(dual(fsym), inverse(fsym)));
  // With a symmetric mu the inverse dual is the reverse of F.
  DevelopableStrip fid = inverse_dual(fsym);
  DevelopableStrip frev = reverse_strip(fsym);
  double worst = 0.0;
  for (int i = 0; i < fsym.size(); ++i)
    worst = std::max(worst, std::abs(fid.alpha[i] - frev.alpha[i]));
  CHECK(worst < 1e-9);

  // Asymmetric case: the arctan-curve strip.
  DevelopableStrip fasym = arctan_strip();
  CHECK_FALSE(right_equivalent(fasym, inverse_dual(fasym)));
  CHECK_FALSE(right_equivalent(fasym, dual(fasym)));
  CHECK_FALSE(right_equivalent(fasym, inverse(fasym)));
}

TEST_CASE("right-equivalence class count: 4 without mu symmetry, 2 with") {
  auto count_classes = [](const IsomerQuartet& q) {
    int classes = 0;
    bool merged[4] = {false, false, false, false};
    for (int i = 0; i < 4; ++i) {
      if (merged[i]) continue;
      ++classes;
      for (int j = i + 1; j < 4; ++j)
        if (right_equivalent(q[i], q[j])) merged[j] = true;
    }
    return classes;
  };
  CHECK(count_classes(make_quartet(arctan_strip())) == 4);
  CHECK(count_classes(make_quartet(helix_strip())) == 2);
}

TEST_CASE("closed families: base member, duality, defining relation") {
  SpaceCurve c = make_space_example("torus_curve", {}, 1024);
  DevelopableStrip F = build_strip(c, [](double) { return 0.9; });
  REQUIRE(is_admissible(F));

  ClosedFamilyMember m10 = closed_family(F, 1, 0.0);
  double worst = 0.0;
  for (int i = 0; i < F.size(); ++i)
    worst = std::max(worst, std::abs(m10.strip.alpha[i] - F.alpha[i]));
  CHECK(worst < 1e-10);

  const double b = 0.37 * c.length;
  ClosedFamilyMember m1 = closed_family(F, 1, b);
  ClosedFamilyMember m2 = closed_family(F, 2, b);
  ClosedFamilyMember m3 = closed_family(F, 3, b);
  for (int i = 0; i < F.size(); ++i) {
    CHECK(m2.strip.alpha[i] == -m1.strip.alpha[i]);
    CHECK(m1.strip.alpha[i] > 0.0);
    CHECK(m3.strip.alpha[i] > 0.0);
    CHECK(m1.strip.mu[i] == F.mu[i]);
    CHECK(m3.strip.mu[i] == F.mu[i]);
  }
  // Defining relation kappa(sigma s + b) cos(alpha_b^i(s)) = mu_F(s).
  ScalarInterpolator kint(c.kappa, c.length, true);
  double res1 = 0.0, res3 = 0.0;
  for (int i = 0; i < F.size(); ++i) {
    const double s = c.s[i];
    res1 = std::max(res1,
                    std::abs(kint.eval(s + b) * std::cos(m1.strip.alpha[i]) - F.mu[i]));
    res3 = std::max(res3,
                    std::abs(kint.eval(-s + b) * std::cos(m3.strip.alpha[i]) - F.mu[i]));
  }
  CHECK(res1 < 1e-8);
  CHECK(res3 < 1e-8);
}

TEST_CASE("closed families require a closed admissible strip") {
  DevelopableStrip open = helix_strip();
  CHECK_THROWS_WITH_AS(closed_family(open, 1, 0.0), doctest::Contains("NotClosed"), GeomError);
}
