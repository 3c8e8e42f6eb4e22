#pragma once
#include "curvefold/strip.hpp"

namespace curvefold {

// Compatible-curve transplant: the master construction behind duals,
// inverses and the closed-crease families.  The target curve must be sampled
// on the same grid as the strip's crease (index-wise correspondence), have
// the same length, and satisfy the compatibility bound mu_f < kappa_target.
// `sign = +1` returns the strip whose first angular function keeps the sign
// of alpha_f, `sign = -1` the one with the opposite sign.
DevelopableStrip transplant(const DevelopableStrip& f, const SpaceCurve& target, int sign,
                            const Tolerances& tol = defaults().tol);

DevelopableStrip dual(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

// Inverse and inverse dual: strips over the orientation-reversed crease with
// the same geodesic curvature.  Defined for admissible strips only.
DevelopableStrip inverse(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);
DevelopableStrip inverse_dual(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

// Reverse f#(u, v) = f(b + c - u, v); interval domains only.
DevelopableStrip reverse_strip(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

struct IsomerQuartet {
  DevelopableStrip f, f_dual, f_inv, f_inv_dual;
  const DevelopableStrip& operator[](int i) const {
    switch (i) {
      case 0: return f;
      case 1: return f_dual;
      case 2: return f_inv;
      default: return f_inv_dual;
    }
  }
  static const char* name(int i) {
    switch (i) {
      case 0: return "F";
      case 1: return "F_dual";
      case 2: return "F_inv";
      default: return "F_inv_dual";
    }
  }
};

IsomerQuartet make_quartet(const DevelopableStrip& f, const Tolerances& tol = defaults().tol);

// One member F_b^i of the four continuous families over a closed crease:
// index i picks the orientation (i in {1,2}: forward, {3,4}: reversed) and
// the sign of alpha (odd: positive, even: negative); b shifts the base point.
struct ClosedFamilyMember {
  int index = 1;    // 1..4
  double shift = 0.0;
  DevelopableStrip strip;
};

ClosedFamilyMember closed_family(const DevelopableStrip& F, int index, double b,
                                 const Tolerances& tol = defaults().tol);

}  // namespace curvefold
