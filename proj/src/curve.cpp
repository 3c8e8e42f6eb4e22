#include "curvefold/curve.hpp"

#include <algorithm>
#include <cmath>

#include "curvefold/stencil.hpp"

namespace curvefold {

namespace {

const double kGL5x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                         0.9061798459386640};
const double kGL5w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                         0.4786286704993665, 0.2369268850561891};

template <class Speed>
double gl5(const Speed& speed, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int k = 0; k < 5; ++k) acc += kGL5w[k] * speed(mid + half * kGL5x[k]);
  return acc * half;
}

void orthonormalize(Vec3& e, Vec3& n, Vec3& b) {
  e.normalize();
  n -= n.dot(e) * e;
  n.normalize();
  b = e.cross(n);
}

std::vector<std::vector<double>> split_components(const std::vector<Vec3>& pts) {
  std::vector<std::vector<double>> comp(3, std::vector<double>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < 3; ++k) comp[k][i] = pts[i][k];
  return comp;
}

// Shared machinery for arc-length resampling through a fitted spline.
template <int Dim, class VecT>
std::vector<VecT> resample_spline(const std::vector<VecT>& points, int target_n, bool closed,
                                  double& total_length) {
  const int m = static_cast<int>(points.size());
  if (m < 4) fail(ErrorCode::DegenerateCurve, "need at least 4 input points");
  std::vector<double> t(m, 0.0);
  for (int i = 1; i < m; ++i) {
    const double d = (points[i] - points[i - 1]).norm();
    if (d == 0.0) fail(ErrorCode::DegenerateCurve, "consecutive input points coincide");
    t[i] = t[i - 1] + d;
  }
  double closing = 0.0;
  if (closed) {
    closing = (points[0] - points[m - 1]).norm();
    if (closing == 0.0) fail(ErrorCode::DegenerateCurve, "closed input repeats the first point");
  }
  if (t[m - 1] + closing < 1e-12) fail(ErrorCode::DegenerateCurve, "cumulative length vanishes");

  std::vector<std::vector<double>> comp(Dim, std::vector<double>(m));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < Dim; ++k) comp[k][i] = points[i][k];
  VectorSpline sp(t, comp, closed, closing);

  auto speed = [&](double u) {
    double d[Dim];
    sp.deriv(u, d);
    double acc = 0.0;
    for (int k = 0; k < Dim; ++k) acc += d[k] * d[k];
    return std::sqrt(acc);
  };

  // Cumulative arc length at the knots (plus the closing interval).
  const int nk = closed ? m : m - 1;
  std::vector<double> knot_s(nk + 1, 0.0);
  for (int i = 0; i < nk; ++i) {
    const double a = t[i];
    const double b = (i == m - 1) ? t[m - 1] + closing : t[i + 1];
    knot_s[i + 1] = knot_s[i] + gl5(speed, a, b);
  }
  total_length = knot_s[nk];

  auto param_at_arclength = [&](double starget) {
    int lo = static_cast<int>(std::upper_bound(knot_s.begin(), knot_s.end(), starget) -
                              knot_s.begin()) - 1;
    lo = std::clamp(lo, 0, nk - 1);
    double ta = t[lo];
    double tb = (lo == m - 1) ? t[m - 1] + closing : t[lo + 1];
    double u = ta + (tb - ta) * (starget - knot_s[lo]) /
                        std::max(knot_s[lo + 1] - knot_s[lo], 1e-300);
    for (int it = 0; it < 30; ++it) {
      const double g = knot_s[lo] + gl5(speed, ta, u) - starget;
      const double dg = speed(u);
      double un = u - g / dg;
      if (!(un > ta - (tb - ta) && un < tb + (tb - ta))) un = 0.5 * (ta + tb);
      if (std::abs(un - u) < 1e-14 * std::max(1.0, std::abs(u))) {
        u = un;
        break;
      }
      u = un;
    }
    return u;
  };

  std::vector<VecT> out(target_n);
  const double step = closed ? total_length / target_n : total_length / (target_n - 1);
  for (int i = 0; i < target_n; ++i) {
    const double starget = std::min(i * step, total_length);
    double buf[Dim];
    sp.eval(param_at_arclength(starget), buf);
    for (int k = 0; k < Dim; ++k) out[i][k] = buf[k];
  }
  return out;
}

}  // namespace

// ---- measurement ----------------------------------------------------------

void measure_frenet(SpaceCurve& c, const Tolerances& tol) {
  const int n = c.size();
  const double h = c.step();
  const auto d1 = stencil::d1(c.point, h, c.closed);
  const auto d2 = stencil::d2(c.point, h, c.closed);
  const auto d3 = stencil::d3(c.point, h, c.closed);
  c.e.resize(n);
  c.n.resize(n);
  c.b.resize(n);
  c.kappa.resize(n);
  c.tau.resize(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 cr = d1[i].cross(d2[i]);
    const double sp = d1[i].norm();
    const double crn = cr.norm();
    c.kappa[i] = crn / (sp * sp * sp);
    if (c.kappa[i] <= tol.tol_kappa)
      fail(ErrorCode::VanishingCurvature, "curvature vanishes at sample " + std::to_string(i));
    c.tau[i] = cr.dot(d3[i]) / (crn * crn);
    Vec3 e = d1[i], nn = d2[i];
    Vec3 b;
    orthonormalize(e, nn, b);
    c.e[i] = e;
    c.n[i] = nn;
    c.b[i] = b;
  }
  // One-sided third-derivative stencils amplify rounding noise; replace tau
  // at the boundary samples by a least-squares cubic fitted to the clean
  // interior values next to each end.
  if (!c.closed && n >= 32) {
    auto smooth_ends = [&](int first, int dir) {
      const int m = 24;
      Eigen::MatrixXd V(m, 4);
      Eigen::VectorXd y(m);
      for (int k = 0; k < m; ++k) {
        const int idx = first + dir * (3 + k);
        const double x = (k - 0.5 * (m - 1)) / m;
        V(k, 0) = 1.0;
        V(k, 1) = x;
        V(k, 2) = x * x;
        V(k, 3) = x * x * x;
        y(k) = c.tau[idx];
      }
      Eigen::Vector4d coef = (V.transpose() * V).ldlt().solve(V.transpose() * y);
      for (int i = 0; i < 3; ++i) {
        const int k = i - 3;  // continue the fit's coordinate past the window
        const double x = (k - 0.5 * (m - 1)) / m;
        c.tau[first + dir * i] = coef(0) + coef(1) * x + coef(2) * x * x + coef(3) * x * x * x;
      }
    };
    smooth_ends(0, +1);
    smooth_ends(n - 1, -1);
  }
}

void measure_plane_curvature(PlaneCurve& c) {
  const int n = c.size();
  const double h = c.step();
  const auto d1 = stencil::d1(c.point, h, c.closed);
  const auto d2 = stencil::d2(c.point, h, c.closed);
  c.mu.resize(n);
  for (int i = 0; i < n; ++i) {
    const double sp = d1[i].norm();
    c.mu[i] = (d1[i].x() * d2[i].y() - d1[i].y() * d2[i].x()) / (sp * sp * sp);
  }
}

void validate(const SpaceCurve& c, const Tolerances& tol) {
  const int n = c.size();
  if (n < 4) fail(ErrorCode::DegenerateCurve, "too few samples");
  const double tol_len = tol.tol_len_rel * c.length;
  for (int i = 0; i + 1 < n; ++i) {
    const double chord = (c.point[i + 1] - c.point[i]).norm();
    if (chord > (c.s[i + 1] - c.s[i]) + tol_len)
      fail(ErrorCode::DegenerateCurve, "arc-length consistency violated at sample " +
                                           std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    if (!(c.kappa[i] > tol.tol_kappa))
      fail(ErrorCode::VanishingCurvature, "curvature not positive at sample " + std::to_string(i));
    Mat3 F;
    F.col(0) = c.e[i];
    F.col(1) = c.n[i];
    F.col(2) = c.b[i];
    if ((F.transpose() * F - Mat3::Identity()).cwiseAbs().maxCoeff() > tol.tol_frame)
      fail(ErrorCode::NonOrthonormalFrame, "frame not orthonormal at sample " + std::to_string(i));
    if (F.determinant() < 0.0)
      fail(ErrorCode::NonOrthonormalFrame, "frame not right-handed at sample " + std::to_string(i));
  }
  if (c.closed) {
    // Wrap continuity: extrapolate the last step back to sample 0.
    const double h = c.step();
    const double jump = (c.point[0] - c.point[n - 1]).norm();
    if (std::abs(jump - h) > tol.tol_periodic * c.length + 1e-3 * h)
      fail(ErrorCode::NotClosed, "closed curve does not wrap");
  }
}

void validate(const PlaneCurve& c, const Tolerances& tol) {
  const int n = c.size();
  if (n < 4) fail(ErrorCode::DegenerateCurve, "too few samples");
  const double tol_len = tol.tol_len_rel * c.length;
  for (int i = 0; i + 1 < n; ++i) {
    if ((c.point[i + 1] - c.point[i]).norm() > (c.s[i + 1] - c.s[i]) + tol_len)
      fail(ErrorCode::DegenerateCurve, "arc-length consistency violated");
    if (!std::isfinite(c.mu[i])) fail(ErrorCode::DegenerateCurve, "mu not finite");
  }
}

// ---- construction ---------------------------------------------------------

namespace {

void fill_s(SpaceCurve& c) {
  const int n = c.size();
  c.s.resize(n);
  for (int i = 0; i < n; ++i)
    c.s[i] = c.closed ? i * c.length / n : -0.5 * c.length + i * c.length / (n - 1);
}

void fill_s(PlaneCurve& c) {
  const int n = c.size();
  c.s.resize(n);
  for (int i = 0; i < n; ++i)
    c.s[i] = c.closed ? i * c.length / n : -0.5 * c.length + i * c.length / (n - 1);
}

}  // namespace

SpaceCurve resample_by_arclength(const std::vector<Vec3>& points, int target_n, bool closed,
                                 const Tolerances& tol) {
  SpaceCurve c;
  c.closed = closed;
  c.point = resample_spline<3, Vec3>(points, target_n, closed, c.length);
  fill_s(c);
  measure_frenet(c, tol);
  return c;
}

PlaneCurve resample_plane_by_arclength(const std::vector<Vec2>& points, int target_n, bool closed,
                                       const Tolerances& tol) {
  PlaneCurve c;
  c.closed = closed;
  c.point = resample_spline<2, Vec2>(points, target_n, closed, c.length);
  fill_s(c);
  measure_plane_curvature(c);
  (void)tol;
  return c;
}

namespace {

// Arc length s(t) of an analytic curve and its inverse, via quadrature on
// |df| over a fine panel grid plus Newton refinement.
class ArclengthMap {
 public:
  ArclengthMap(std::function<double(double)> speed, double t0, double t1)
      : speed_(std::move(speed)), t0_(t0), t1_(t1) {
    const int panels = 4096;
    s_.resize(panels + 1, 0.0);
    tk_.resize(panels + 1);
    for (int i = 0; i <= panels; ++i) tk_[i] = t0_ + (t1_ - t0_) * i / panels;
    for (int i = 0; i < panels; ++i)
      s_[i + 1] = s_[i] + gl5([&](double u) { return speed_(u); }, tk_[i], tk_[i + 1]);
  }

  double total() const { return s_.back(); }

  double t_at(double starget) const {
    int lo = static_cast<int>(std::upper_bound(s_.begin(), s_.end(), starget) - s_.begin()) - 1;
    lo = std::clamp(lo, 0, static_cast<int>(s_.size()) - 2);
    double u = tk_[lo] + (tk_[lo + 1] - tk_[lo]) * (starget - s_[lo]) /
                             std::max(s_[lo + 1] - s_[lo], 1e-300);
    for (int it = 0; it < 30; ++it) {
      const double g = s_[lo] + gl5([&](double w) { return speed_(w); }, tk_[lo], u) - starget;
      double un = u - g / speed_(u);
      if (std::abs(un - u) < 1e-15 * std::max(1.0, std::abs(u))) {
        u = un;
        break;
      }
      u = un;
    }
    return u;
  }

 private:
  std::function<double(double)> speed_;
  double t0_, t1_;
  std::vector<double> s_, tk_;
};

}  // namespace

SpaceCurve sample_analytic(const std::function<Vec3(double)>& f,
                           const std::function<Vec3(double)>& df, double t0, double t1,
                           int target_n, bool closed, const Tolerances& tol) {
  ArclengthMap map([&](double t) { return df(t).norm(); }, t0, t1);
  SpaceCurve c;
  c.closed = closed;
  c.length = map.total();
  c.point.resize(target_n);
  const double step = closed ? c.length / target_n : c.length / (target_n - 1);
  for (int i = 0; i < target_n; ++i) c.point[i] = f(map.t_at(std::min(i * step, c.length)));
  fill_s(c);
  measure_frenet(c, tol);
  return c;
}

PlaneCurve sample_analytic_plane(const std::function<Vec2(double)>& f,
                                 const std::function<Vec2(double)>& df, double t0, double t1,
                                 int target_n, bool closed, const Tolerances& tol) {
  ArclengthMap map([&](double t) { return df(t).norm(); }, t0, t1);
  PlaneCurve c;
  c.closed = closed;
  c.length = map.total();
  c.point.resize(target_n);
  const double step = closed ? c.length / target_n : c.length / (target_n - 1);
  for (int i = 0; i < target_n; ++i) c.point[i] = f(map.t_at(std::min(i * step, c.length)));
  fill_s(c);
  measure_plane_curvature(c);
  (void)tol;
  return c;
}

SpaceCurve curve_from_kappa_tau(const std::function<double(double)>& kappa,
                                const std::function<double(double)>& tau, double l,
                                const FrenetFrame& initial, bool closed, int n,
                                const Tolerances& tol) {
  if (n <= 0) n = defaults().resolution;
  {
    Mat3 F;
    F.col(0) = initial.e;
    F.col(1) = initial.n;
    F.col(2) = initial.b;
    if ((F.transpose() * F - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-6)
      fail(ErrorCode::NonOrthonormalFrame, "initial frame is not orthonormal");
  }

  const int intervals = closed ? n : n - 1;
  const int substeps = std::max(1, (2048 + intervals - 1) / intervals);
  const double h = l / intervals / substeps;
  const double s0 = closed ? 0.0 : -0.5 * l;

  auto kap = [&](double s) {
    const double k = kappa(s);
    if (!(k > tol.tol_kappa)) fail(ErrorCode::NonPositiveKappa, "kappa(s) <= 0 during integration");
    return k;
  };

  SpaceCurve c;
  c.closed = closed;
  c.length = l;
  c.point.resize(n);
  c.e.resize(n);
  c.n.resize(n);
  c.b.resize(n);
  c.kappa.resize(n);
  c.tau.resize(n);

  Vec3 p = initial.point, e = initial.e, nn = initial.n, b = initial.b;
  orthonormalize(e, nn, b);

  auto store = [&](int i, double s) {
    c.point[i] = p;
    c.e[i] = e;
    c.n[i] = nn;
    c.b[i] = b;
    c.kappa[i] = kap(s);
    c.tau[i] = tau(s);
  };
  store(0, s0);

  struct State {
    Vec3 p, e, n, b;
  };
  auto rhs = [&](double s, const State& y) {
    State d;
    const double k = kap(s), t = tau(s);
    d.p = y.e;
    d.e = k * y.n;
    d.n = -k * y.e + t * y.b;
    d.b = -t * y.n;
    return d;
  };
  auto axpy = [](const State& y, double a, const State& d) {
    return State{y.p + a * d.p, y.e + a * d.e, y.n + a * d.n, y.b + a * d.b};
  };

  double s = s0;
  for (int i = 1; i <= intervals; ++i) {
    for (int k = 0; k < substeps; ++k) {
      State y{p, e, nn, b};
      State k1 = rhs(s, y);
      State k2 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, k1));
      State k3 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, k2));
      State k4 = rhs(s + h, axpy(y, h, k3));
      p = y.p + (h / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
      e = y.e + (h / 6.0) * (k1.e + 2.0 * k2.e + 2.0 * k3.e + k4.e);
      nn = y.n + (h / 6.0) * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n);
      b = y.b + (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
      orthonormalize(e, nn, b);
      s += h;
      if (!p.allFinite()) fail(ErrorCode::IntegrationFailure, "state not finite");
    }
    if (i < intervals || !closed) store(i, s);
  }
  if (closed) {
    if ((p - initial.point).norm() > tol.tol_periodic * l)
      fail(ErrorCode::NotClosed, "kappa/tau data does not close up");
  }
  fill_s(c);
  return c;
}

PlaneCurve plane_curve_from_mu(const std::function<double(double)>& mu, double l,
                               const Vec2& origin, double heading, bool closed, int n,
                               const Tolerances& tol) {
  if (n <= 0) n = defaults().resolution;
  const int intervals = closed ? n : n - 1;
  const int substeps = std::max(1, (2048 + intervals - 1) / intervals);
  const double h = l / intervals / substeps;
  const double s0 = closed ? 0.0 : -0.5 * l;

  PlaneCurve c;
  c.closed = closed;
  c.length = l;
  c.point.resize(n);
  c.mu.resize(n);

  double theta = heading;
  Vec2 p = origin;
  c.point[0] = p;
  c.mu[0] = mu(s0);

  auto rhs = [&](double s, double th) { return Eigen::Vector3d(mu(s), std::cos(th), std::sin(th)); };
  double s = s0;
  for (int i = 1; i <= intervals; ++i) {
    for (int k = 0; k < substeps; ++k) {
      Eigen::Vector3d k1 = rhs(s, theta);
      Eigen::Vector3d k2 = rhs(s + 0.5 * h, theta + 0.5 * h * k1(0));
      Eigen::Vector3d k3 = rhs(s + 0.5 * h, theta + 0.5 * h * k2(0));
      Eigen::Vector3d k4 = rhs(s + h, theta + h * k3(0));
      Eigen::Vector3d inc = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      theta += inc(0);
      p += inc.tail<2>();
      s += h;
      if (!std::isfinite(theta) || !p.allFinite())
        fail(ErrorCode::IntegrationFailure, "development diverged");
    }
    if (i < intervals || !closed) {
      c.point[i] = p;
      c.mu[i] = mu(s);
    }
  }
  (void)tol;
  fill_s(c);
  return c;
}

PlaneCurve plane_curve_from_mu_samples(const std::vector<double>& mu, double l, bool closed,
                                       const Vec2& origin, double heading, const Tolerances& tol) {
  ScalarInterpolator interp(mu, l, closed);
  return plane_curve_from_mu([&](double s) { return interp.eval(s); }, l, origin, heading, closed,
                             static_cast<int>(mu.size()), tol);
}

SpaceCurve reverse_curve(const SpaceCurve& c) {
  const int n = c.size();
  SpaceCurve r = c;
  auto src = [&](int i) { return c.closed ? (n - i) % n : n - 1 - i; };
  for (int i = 0; i < n; ++i) {
    const int j = src(i);
    r.point[i] = c.point[j];
    r.e[i] = -c.e[j];
    r.n[i] = c.n[j];
    r.b[i] = -c.b[j];
    r.kappa[i] = c.kappa[j];
    r.tau[i] = c.tau[j];
  }
  r.param_offset = -c.param_offset;
  return r;
}

PlaneCurve reverse_curve(const PlaneCurve& c) {
  const int n = c.size();
  PlaneCurve r = c;
  auto src = [&](int i) { return c.closed ? (n - i) % n : n - 1 - i; };
  for (int i = 0; i < n; ++i) {
    const int j = src(i);
    r.point[i] = c.point[j];
    r.mu[i] = c.mu[j];
  }
  return r;
}

SpaceCurve shift_closed_curve(const SpaceCurve& c, int sigma, double b) {
  if (!c.closed) fail(ErrorCode::NotClosed, "shift_closed_curve needs a closed curve");
  const int n = c.size();
  const double h = c.step();
  VectorSpline pos(c.s, split_components(c.point), true, h);
  ScalarInterpolator kint(c.kappa, c.length, true), tint(c.tau, c.length, true);
  VectorSpline nin(c.s, split_components(c.n), true, h);

  SpaceCurve out;
  out.closed = true;
  out.length = c.length;
  out.point.resize(n);
  out.e.resize(n);
  out.n.resize(n);
  out.b.resize(n);
  out.kappa.resize(n);
  out.tau.resize(n);
  for (int i = 0; i < n; ++i) {
    const double sown = i * h;
    const double ssrc = sigma * sown + b;
    double buf[3];
    pos.eval(ssrc, buf);
    out.point[i] = Vec3(buf[0], buf[1], buf[2]);
    pos.deriv(ssrc, buf);
    Vec3 tangent = sigma * Vec3(buf[0], buf[1], buf[2]);
    nin.eval(ssrc, buf);
    Vec3 normal(buf[0], buf[1], buf[2]);
    Vec3 bn;
    orthonormalize(tangent, normal, bn);
    out.e[i] = tangent;
    out.n[i] = normal;
    out.b[i] = bn;
    out.kappa[i] = kint.eval(ssrc);
    out.tau[i] = tint.eval(ssrc);
  }
  fill_s(out);
  return out;
}

bool has_self_intersections(const PlaneCurve& c) {
  const int n = c.size();
  const int nseg = c.closed ? n : n - 1;
  auto seg = [&](int i, Vec2& a, Vec2& b) {
    a = c.point[i];
    b = c.point[(i + 1) % n];
  };
  auto orient = [](const Vec2& a, const Vec2& b, const Vec2& p) {
    return (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
  };
  for (int i = 0; i < nseg; ++i) {
    Vec2 a1, b1;
    seg(i, a1, b1);
    for (int j = i + 2; j < nseg; ++j) {
      if (c.closed && i == 0 && j == nseg - 1) continue;  // wrap neighbors
      Vec2 a2, b2;
      seg(j, a2, b2);
      const double o1 = orient(a1, b1, a2), o2 = orient(a1, b1, b2);
      const double o3 = orient(a2, b2, a1), o4 = orient(a2, b2, b1);
      if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return true;
    }
  }
  return false;
}

bool has_self_intersections(const SpaceCurve& c, double tube_radius) {
  const int n = c.size();
  const double h = c.step();
  const int guard = std::max(2, static_cast<int>(std::ceil(3.0 * tube_radius / h)) + 2);
  const double r2 = tube_radius * tube_radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + guard; j < n; ++j) {
      if (c.closed && (n - (j - i)) < guard) continue;
      if ((c.point[i] - c.point[j]).squaredNorm() < r2) return true;
    }
  }
  return false;
}

SpaceCurve SpaceCurve::transformed(const Isometry3& iso) const {
  SpaceCurve out = *this;
  const double sign = iso.orientation_sign();
  for (int i = 0; i < size(); ++i) {
    out.point[i] = iso.apply(point[i]);
    out.e[i] = iso.apply_dir(e[i]);
    out.n[i] = iso.apply_dir(n[i]);
    out.b[i] = sign * iso.apply_dir(b[i]);
    out.tau[i] = sign * tau[i];
  }
  return out;
}

CurveInterpolator::CurveInterpolator(const SpaceCurve& c)
    : pos_(c.s, split_components(c.point), c.closed, c.closed ? c.step() : 0.0) {}

Vec3 CurveInterpolator::position(double s) const {
  double buf[3];
  pos_.eval(s, buf);
  return Vec3(buf[0], buf[1], buf[2]);
}

ScalarInterpolator::ScalarInterpolator(const std::vector<double>& values, double length,
                                       bool closed)
    : sp_(
          [&] {
            std::vector<double> x(values.size());
            for (size_t i = 0; i < values.size(); ++i)
              x[i] = closed ? i * length / values.size()
                            : -0.5 * length + i * length / (values.size() - 1);
            return x;
          }(),
          values, closed, closed ? length / values.size() : 0.0) {}

double ScalarInterpolator::eval(double s) const { return sp_.eval(s); }

}  // namespace curvefold
