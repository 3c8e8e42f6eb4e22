#include "curvefold/examples.hpp"

#include <cmath>

namespace curvefold {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Arc-length parametrized analytic curve: evaluate directly on the s grid.
SpaceCurve sample_arclength_curve(const std::function<Vec3(double)>& f, double s0, double s1,
                                  int n, bool closed) {
  SpaceCurve c;
  c.closed = closed;
  c.length = s1 - s0;
  c.point.resize(n);
  const double step = closed ? c.length / n : c.length / (n - 1);
  for (int i = 0; i < n; ++i) c.point[i] = f(s0 + i * step);
  c.s.resize(n);
  for (int i = 0; i < n; ++i)
    c.s[i] = closed ? i * step : -0.5 * c.length + i * step;
  measure_frenet(c);
  c.param_offset = closed ? s0 : 0.5 * (s0 + s1);
  return c;
}

std::map<std::string, double> merge_params(const ExampleInfo& info,
                                           const std::map<std::string, double>& given) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : info.params) out[k] = v;
  for (const auto& [k, v] : given) {
    if (!out.count(k))
      fail(ErrorCode::InvalidConfig, "example '" + info.name + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

const ExampleInfo& find_example(const std::string& name) {
  for (const auto& e : example_registry())
    if (e.name == name) return e;
  fail(ErrorCode::InvalidConfig, "unknown example '" + name + "'");
}

}  // namespace

const std::vector<ExampleInfo>& example_registry() {
  static const std::vector<ExampleInfo> reg = {
      {"helix", false, false,
       "circular helix (cos(s/sqrt2), sin(s/sqrt2), s/sqrt2) with curvature = torsion = 1/2",
       {{"l", 4.0}}},
      {"arctan_curve", false, false,
       "arc-length curve (arctan u, log(1+u^2)/sqrt2, u - arctan u) on [1/10, 9/10]; "
       "curvature = torsion = sqrt2/(1+u^2)",
       {}},
      {"quarter_circle", false, false, "quarter of the unit circle in the z = 0 plane", {}},
      {"circle", false, true, "unit circle in the z = 0 plane (closed crease)", {}},
      {"perturbed_helix", false, false,
       "curve (cos t, sin(t+d), t) on [3pi/8, 5pi/8]; d > 0 tilts the helix and makes "
       "the curvature strictly decreasing",
       {{"d", 0.1}}},
      {"torus_curve", false, true,
       "closed curve ((2+cos mt)cos t, (2+cos mt)sin t, sin mt) on a torus of revolution",
       {{"m", 3.0}}},
      {"trochoid", true, false,
       "trochoid (2t/3 - sin t, 1 - cos t); the window [t0, t1] selects the piece",
       {{"t0", 0.0}, {"t1", 2.0 * kPi}}},
      {"ellipse", true, true, "ellipse k*(cos t, a sin t), generator for closed creases",
       {{"a", 1.2}, {"k", 1.0}}},
  };
  return reg;
}

bool is_plane_example(const std::string& name) { return find_example(name).is_plane; }

SpaceCurve make_space_example(const std::string& name, const std::map<std::string, double>& params,
                              int n) {
  if (n <= 0) n = defaults().resolution;
  const ExampleInfo& info = find_example(name);
  if (info.is_plane) fail(ErrorCode::InvalidConfig, "'" + name + "' is a plane-curve example");
  auto p = merge_params(info, params);

  if (name == "helix") {
    const double l = p.at("l");
    const double r = 1.0 / std::sqrt(2.0);
    return sample_arclength_curve(
        [&](double s) { return Vec3(std::cos(s * r), std::sin(s * r), s * r); }, -0.5 * l, 0.5 * l,
        n, false);
  }
  if (name == "arctan_curve") {
    return sample_arclength_curve(
        [&](double u) {
          return Vec3(std::atan(u), std::log1p(u * u) / std::sqrt(2.0), u - std::atan(u));
        },
        0.1, 0.9, n, false);
  }
  if (name == "quarter_circle") {
    return sample_arclength_curve([&](double s) { return Vec3(std::cos(s), std::sin(s), 0.0); },
                                  -0.25 * kPi, 0.25 * kPi, n, false);
  }
  if (name == "circle") {
    return sample_arclength_curve([&](double s) { return Vec3(std::cos(s), std::sin(s), 0.0); },
                                  0.0, 2.0 * kPi, n, true);
  }
  if (name == "perturbed_helix") {
    const double d = p.at("d");
    return sample_analytic(
        [&](double t) { return Vec3(std::cos(t), std::sin(t + d), t); },
        [&](double t) { return Vec3(-std::sin(t), std::cos(t + d), 1.0); }, 3.0 * kPi / 8.0,
        5.0 * kPi / 8.0, n, false);
  }
  if (name == "torus_curve") {
    const double m = p.at("m");
    return sample_analytic(
        [&](double t) {
          const double rr = 2.0 + std::cos(m * t);
          return Vec3(rr * std::cos(t), rr * std::sin(t), std::sin(m * t));
        },
        [&](double t) {
          const double rr = 2.0 + std::cos(m * t);
          const double dr = -m * std::sin(m * t);
          return Vec3(dr * std::cos(t) - rr * std::sin(t), dr * std::sin(t) + rr * std::cos(t),
                      m * std::cos(m * t));
        },
        0.0, 2.0 * kPi, n, true);
  }
  fail(ErrorCode::InvalidConfig, "unhandled space example '" + name + "'");
}

PlaneCurve make_plane_example(const std::string& name, const std::map<std::string, double>& params,
                              int n) {
  if (n <= 0) n = defaults().resolution;
  const ExampleInfo& info = find_example(name);
  if (!info.is_plane) fail(ErrorCode::InvalidConfig, "'" + name + "' is a space-curve example");
  auto p = merge_params(info, params);

  if (name == "trochoid") {
    const double t0 = p.at("t0"), t1 = p.at("t1");
    return sample_analytic_plane(
        [&](double t) { return Vec2(2.0 * t / 3.0 - std::sin(t), 1.0 - std::cos(t)); },
        [&](double t) { return Vec2(2.0 / 3.0 - std::cos(t), std::sin(t)); }, t0, t1, n, false);
  }
  if (name == "ellipse") {
    const double a = p.at("a"), k = p.at("k");
    return sample_analytic_plane(
        [&](double t) { return Vec2(k * std::cos(t), k * a * std::sin(t)); },
        [&](double t) { return Vec2(-k * std::sin(t), k * a * std::cos(t)); }, 0.0, 2.0 * kPi, n,
        true);
  }
  fail(ErrorCode::InvalidConfig, "unhandled plane example '" + name + "'");
}

void parse_example_spec(const std::string& spec, std::string& name,
                        std::map<std::string, double>& params) {
  params.clear();
  const auto open = spec.find('(');
  if (open == std::string::npos) {
    name = spec;
    return;
  }
  if (spec.back() != ')') fail(ErrorCode::InvalidConfig, "malformed example spec '" + spec + "'");
  name = spec.substr(0, open);
  const ExampleInfo& info = find_example(name);
  std::string args = spec.substr(open + 1, spec.size() - open - 2);
  size_t pos = 0, idx = 0;
  while (pos < args.size()) {
    size_t comma = args.find(',', pos);
    if (comma == std::string::npos) comma = args.size();
    std::string tok = args.substr(pos, comma - pos);
    if (idx >= info.params.size())
      fail(ErrorCode::InvalidConfig, "too many parameters for example '" + name + "'");
    try {
      params[info.params[idx].first] = std::stod(tok);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidConfig, "bad numeric parameter '" + tok + "'");
    }
    ++idx;
    pos = comma + 1;
  }
}

}  // namespace curvefold
