#pragma once

namespace curvefold {

// Numerical tolerances and resolution defaults, centralized.  Tolerances
// suffixed `_rel` are relative to the total curve length l; the rest are
// absolute.  Code should always pull these from a Tolerances instance so a
// caller can tighten or relax a single knob.
struct Tolerances {
  double tol_len_rel = 1e-6;       // arc-length bookkeeping, per unit length
  double tol_frame = 1e-8;         // frame orthonormality / rotation matrices
  double tol_tau = 1e-5;           // sup |tau| threshold for planarity
  double tol_kappa = 1e-9;         // curvature positivity / admissibility margin
  double tol_kappa_var = 1e-5;     // sup |kappa - mean| threshold for circles
  double tol_sym_rel = 1e-4;       // symmetry & congruence residual, per unit length
  double tol_ode = 1e-5;           // reconstruction: measured vs requested kappa/tau
  double tol_periodic = 1e-5;      // wrap mismatch for closed curves
  double tol_plane_rel = 1e-6;     // best-fit plane residual, per unit length
  double tol_alpha = 1e-6;         // margin keeping alpha away from 0 and pi/2
  double tol_beta = 1e-6;          // residual of the ruling-angle identity
  double tol_flat = 1e-6;          // max angle defect (radians) of strip meshes
  double tol_musym = 1e-5;         // mu symmetry residual, relative to sup |mu|
  double tol_deriv_rel = 1e-6;     // midpoint-criterion derivative threshold, times 1/l
  double tol_H = 1e-6;             // mean-curvature matching residual
};

struct MeshDefaults {
  double width_rel = 0.05;      // strip half-width, per unit crease length
  double width_kappa_cap = 0.3; // cap: width <= this / max curvature
  int n_v = 9;                  // samples across the band
};

struct Defaults {
  int resolution = 2048;  // samples along a curve
  Tolerances tol;
  MeshDefaults mesh;
};

inline const Defaults& defaults() {
  static const Defaults d;
  return d;
}

}  // namespace curvefold
