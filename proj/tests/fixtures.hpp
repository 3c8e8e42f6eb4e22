#pragma once
// Strip fixtures spanning planar / non-planar creases with symmetric /
// asymmetric curvature and symmetric / asymmetric geodesic curvature, plus
// the expected right-equivalence and congruence class counts.
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "curvefold/analysis.hpp"
#include "curvefold/examples.hpp"

namespace curvefold::fixtures {

struct StripFixture {
  std::string name;
  int expected_right = 0;
  int expected_congruence = 0;
  TheoremCase expected_case = TheoremCase::B2_le_two;
  DevelopableStrip strip;
};

inline std::vector<StripFixture> battery(int n) {
  constexpr double kPi = 3.14159265358979323846;
  std::vector<StripFixture> out;
  auto from_kt = [&](const std::function<double(double)>& k, const std::function<double(double)>& t,
                     double l, const std::function<double(double)>& a) {
    SpaceCurve c = curve_from_kappa_tau(k, t, l, FrenetFrame{}, false, n);
    return build_strip(c, a);
  };
  auto konst = [](double v) { return [v](double) { return v; }; };
  const auto zero = konst(0.0);

  // Planar, symmetric curvature.
  out.push_back({"circle-arc, constant alpha", 2, 1, TheoremCase::B3a_planar_nontrivial,
                 from_kt(konst(1.0), zero, 1.0, konst(0.7))});
  out.push_back({"circle-arc, sloped alpha", 4, 1, TheoremCase::B3a_planar_nontrivial,
                 from_kt(konst(1.0), zero, 0.5 * kPi,
                         [](double s) { return 0.25 * kPi - 0.5 * s; })});
  // Planar, asymmetric curvature.
  auto ramp = [](double s) { return 2.0 + s; };
  out.push_back({"planar ramp, constant alpha", 4, 2, TheoremCase::B2_le_two,
                 from_kt(ramp, zero, 0.5, konst(1.0))});
  out.push_back({"planar ramp, constant mu", 2, 1, TheoremCase::B3b_planar_mu_sym,
                 from_kt(ramp, zero, 0.5, [](double s) { return std::acos(1.5 / (2.0 + s)); })});
  // Helix: positive symmetry, constant curvature.
  out.push_back({"helix, constant alpha", 2, 1, TheoremCase::B3c_positive_sym_mu_sym,
                 build_strip(make_space_example("helix", {}, n), konst(0.9))});
  out.push_back({"helix, sloped alpha", 4, 2, TheoremCase::B2_le_two,
                 build_strip(make_space_example("helix", {}, n),
                             [](double s) { return 0.5 + s / 10.0; })});
  // Negative symmetry (kappa even, tau odd).
  auto keven = [](double s) { return 1.0 + 0.5 * s * s; };
  auto todd = [](double s) { return s; };
  out.push_back({"negative symmetry, symmetric mu", 2, 2, TheoremCase::B2_le_two,
                 from_kt(keven, todd, 1.0, konst(0.8))});
  out.push_back({"negative symmetry, asymmetric mu", 4, 2, TheoremCase::B2_le_two,
                 from_kt(keven, todd, 1.0, [](double s) { return 0.8 + 0.15 * s; })});
  // Positive symmetry, non-constant curvature (kappa and tau even).
  auto teven = [](double s) { return 0.5 + s * s; };
  out.push_back({"positive symmetry, symmetric mu", 2, 1,
                 TheoremCase::B3c_positive_sym_mu_sym, from_kt(keven, teven, 1.0, konst(0.8))});
  out.push_back({"positive symmetry, asymmetric mu", 4, 2, TheoremCase::B2_le_two,
                 from_kt(keven, teven, 1.0, [](double s) { return 0.8 + 0.15 * s; })});
  // No symmetries at all.
  out.push_back({"arctan curve", 4, 4, TheoremCase::B1_no_symmetries,
                 build_strip(make_space_example("arctan_curve", {}, n),
                             [](double u) { return kPi * (u + 10.0) / 24.0; })});
  // Asymmetric curve, constant mu.
  auto kshift = [](double s) {
    const double u = s + 0.5;
    return std::sqrt(2.0) / (1.0 + u * u);
  };
  out.push_back({"asymmetric curve, constant mu", 2, 2, TheoremCase::B2_le_two,
                 from_kt(kshift, kshift, 0.8,
                         [&](double s) { return std::acos(0.3 / kshift(s)); })});
  return out;
}

}  // namespace curvefold::fixtures
