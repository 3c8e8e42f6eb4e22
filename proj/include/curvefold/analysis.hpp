#pragma once
#include <array>
#include <string>
#include <vector>

#include "curvefold/isomers.hpp"
#include "curvefold/symmetry.hpp"

namespace curvefold {

// ---- symmetries of geodesic curvature functions ----------------------------

enum class DomainKind { Interval, Torus };

struct FunctionSymmetryAction {
  int sigma = -1;
  double d = 0.0;
  double residual = 0.0;
};

struct FunctionSymmetryReport {
  DomainKind domain = DomainKind::Interval;
  bool has_symmetry = false;
  bool infinite = false;  // constant function on a torus
  std::vector<FunctionSymmetryAction> actions;
  double best_residual = 0.0;
};

FunctionSymmetryReport mu_symmetry(const std::vector<double>& mu, double length, bool torus,
                                   const Tolerances& tol = defaults().tol);

// ---- congruence of the isomer quartet (interval creases) -------------------

enum class TheoremCase {
  B1_no_symmetries,
  B2_le_two,
  B3a_planar_nontrivial,
  B3b_planar_mu_sym,
  B3c_positive_sym_mu_sym,
};
const char* theorem_case_name(TheoremCase c);

struct CongruenceReport {
  int n_right_classes = 0;       // 2 or 4
  int n_congruence_classes = 0;  // N from the decision tree
  TheoremCase fired_case = TheoremCase::B2_le_two;
  std::vector<TheoremCase> satisfied_cases;
  CurveSymmetryReport curve_symmetries;
  FunctionSymmetryReport mu_symmetries;
  std::array<std::array<bool, 4>, 4> pairwise{};  // congruence by registration
  int oracle_classes = 0;                         // class count from `pairwise`
  bool oracle_agrees = false;
  std::vector<std::string> evidence;
};

// Right-equivalence of two normal forms sharing a crease image: equality of
// alpha arrays, directly or through the reverse correspondence.
bool right_equivalent(const DevelopableStrip& a, const DevelopableStrip& b,
                      const Tolerances& tol = defaults().tol);

// Set congruence of two strip bands under a finite list of candidate motions
// (curve symmetries and the identity), tested by two-sided registration of
// sampled points against the ruled bands.
bool strips_congruent(const DevelopableStrip& a, const DevelopableStrip& b,
                      const std::vector<Isometry3>& candidates,
                      const Tolerances& tol = defaults().tol);

CongruenceReport classify_quartet(const DevelopableStrip& F,
                                  const Tolerances& tol = defaults().tol);

// ---- midpoint criterion -----------------------------------------------------

enum class MidpointVerdict { N_is_4, Inconclusive };
MidpointVerdict midpoint_criterion(const DevelopableStrip& F,
                                   const Tolerances& tol = defaults().tol);

// ---- equal-mean-curvature torsion solver ------------------------------------

struct MeanCurvatureTorsionResult {
  double length_used = 0.0;   // interval kept after discriminant shrinking
  std::vector<double> tau;
  SpaceCurve curve;
  DevelopableStrip F;
  DevelopableStrip F1;        // reverse of the inverse dual of F
  double tau_at_zero = 0.0;
  double max_H_residual = 0.0;          // sup |H_F - H_F1|
  double max_quadratic_residual = 0.0;  // sup |B0 tau^2 + 2 B1 tau + B2|
};

MeanCurvatureTorsionResult equal_mean_curvature_torsion(
    const std::function<double(double)>& kappa, const std::function<double(double)>& alpha,
    double l, int n = 0, const Tolerances& tol = defaults().tol);

// ---- closed-crease census ----------------------------------------------------

struct ClosedCensus {
  std::vector<ClosedFamilyMember> members;  // 4 * grid_b strips
  std::vector<std::vector<bool>> congruent;
  int n_classes = 0;
  std::vector<int> class_of;
  int curve_symmetry_count = 0;  // non-trivial symmetries of the crease
  int mu_action_count = 0;
  bool class_sizes_bounded = true;  // by 4 * (#sym + 1) * (#mu actions + 1)
  bool all_distinct = false;        // expected when curve and mu have no symmetries
};

ClosedCensus classify_closed(const DevelopableStrip& F, int grid_b,
                             const Tolerances& tol = defaults().tol);

// Pairwise congruence of an arbitrary strip list under shared candidates.
std::vector<std::vector<bool>> congruence_matrix(const std::vector<const DevelopableStrip*>& strips,
                                                 const std::vector<Isometry3>& candidates,
                                                 const Tolerances& tol = defaults().tol);

}  // namespace curvefold
