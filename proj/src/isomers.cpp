#include "curvefold/isomers.hpp"

#include <algorithm>
#include <cmath>

namespace curvefold {

DevelopableStrip transplant(const DevelopableStrip& f, const SpaceCurve& target, int sign,
                            const Tolerances& tol) {
  const int n = f.size();
  if (target.size() != n || std::abs(target.length - f.length()) > tol.tol_len_rel * f.length())
    fail(ErrorCode::IncompatibleCurve, "target curve is not sampled on the strip's grid");
  const double base_sign = f.alpha[0] > 0.0 ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i)
    if (f.alpha[i] * base_sign <= 0.0)
      fail(ErrorCode::UnsupportedSignChange, "alpha changes sign; transplant needs a fixed sign");

  double worst = 0.0;
  int worst_i = 0;
  for (int i = 0; i < n; ++i) {
    const double margin = target.kappa[i] - tol.tol_kappa - std::abs(f.mu[i]);
    if (margin < worst) {
      worst = margin;
      worst_i = i;
    }
  }
  if (worst < 0.0)
    fail(ErrorCode::IncompatibleCurve,
         "mu exceeds the target curvature at s = " + std::to_string(target.s[worst_i]));

  std::vector<double> alpha(n);
  for (int i = 0; i < n; ++i) {
    const double r = std::clamp(f.mu[i] / target.kappa[i], -1.0, 1.0);
    alpha[i] = sign * base_sign * std::acos(r);
  }
  return build_strip_from_samples(target, alpha, f.width, tol, f.mu);
}

DevelopableStrip dual(const DevelopableStrip& f, const Tolerances& tol) {
  return dual_strip(f, tol);
}

DevelopableStrip inverse(const DevelopableStrip& f, const Tolerances& tol) {
  if (!is_admissible(f, tol))
    fail(ErrorCode::NotAdmissible, "inverse is defined for admissible strips only");
  return transplant(f, reverse_curve(f.crease), +1, tol);
}

DevelopableStrip inverse_dual(const DevelopableStrip& f, const Tolerances& tol) {
  if (!is_admissible(f, tol))
    fail(ErrorCode::NotAdmissible, "inverse dual is defined for admissible strips only");
  return transplant(f, reverse_curve(f.crease), -1, tol);
}

DevelopableStrip reverse_strip(const DevelopableStrip& f, const Tolerances& tol) {
  if (f.crease.closed)
    fail(ErrorCode::TorusDomain, "reverse is defined on interval domains; use closed_family");
  const int n = f.size();
  std::vector<double> alpha(n), mu(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = -f.alpha[n - 1 - i];
    mu[i] = f.mu[n - 1 - i];
  }
  return build_strip_from_samples(reverse_curve(f.crease), alpha, f.width, tol, mu);
}

IsomerQuartet make_quartet(const DevelopableStrip& f, const Tolerances& tol) {
  IsomerQuartet q{f, dual(f, tol), inverse(f, tol), inverse_dual(f, tol)};
  return q;
}

ClosedFamilyMember closed_family(const DevelopableStrip& F, int index, double b,
                                 const Tolerances& tol) {
  if (!F.crease.closed) fail(ErrorCode::NotClosed, "closed_family needs a closed crease");
  if (!is_admissible(F, tol)) fail(ErrorCode::NotAdmissible, "family needs an admissible strip");
  if (index < 1 || index > 4) fail(ErrorCode::InvalidConfig, "family index must be in 1..4");
  const double l = F.length();
  b = std::fmod(b, l);
  if (b < 0) b += l;

  const int sigma = index <= 2 ? 1 : -1;
  const double sgn = (index % 2 == 1) ? 1.0 : -1.0;
  SpaceCurve target = shift_closed_curve(F.crease, sigma, b);

  const int n = F.size();
  std::vector<double> alpha(n);
  for (int i = 0; i < n; ++i) {
    const double r = std::clamp(F.mu[i] / target.kappa[i], -1.0, 1.0);
    alpha[i] = sgn * std::acos(r);
  }
  ClosedFamilyMember m;
  m.index = index;
  m.shift = b;
  m.strip = build_strip_from_samples(target, alpha, F.width, tol, F.mu);
  return m;
}

}  // namespace curvefold
