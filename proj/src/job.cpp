#include "curvefold/job.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "curvefold/analysis.hpp"
#include "curvefold/examples.hpp"
#include "curvefold/io.hpp"
#include "curvefold/isomers.hpp"

namespace curvefold {

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

double parse_angle_expr(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) fail(ErrorCode::InvalidConfig, "empty numeric expression");
  double sign = 1.0;
  if (t[0] == '+' || t[0] == '-') {
    if (t[0] == '-') sign = -1.0;
    t = trim(t.substr(1));
  }
  const auto pi_pos = t.find("pi");
  double value;
  if (pi_pos == std::string::npos) {
    size_t used = 0;
    try {
      value = std::stod(t, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidConfig, "cannot parse number '" + text + "'");
    }
    if (used != t.size()) fail(ErrorCode::InvalidConfig, "trailing junk in '" + text + "'");
    return sign * value;
  }
  std::string coef = trim(t.substr(0, pi_pos));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  value = kPi;
  if (!coef.empty()) {
    try {
      value *= std::stod(coef);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidConfig, "cannot parse coefficient in '" + text + "'");
    }
  }
  std::string rest = trim(t.substr(pi_pos + 2));
  if (!rest.empty()) {
    if (rest[0] != '/') fail(ErrorCode::InvalidConfig, "expected '/denominator' in '" + text + "'");
    try {
      value /= std::stod(trim(rest.substr(1)));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidConfig, "cannot parse denominator in '" + text + "'");
    }
  }
  return sign * value;
}

std::function<double(double)> parse_alpha_spec(const std::string& spec) {
  const std::string t = trim(spec);
  auto args_of = [&](size_t open) {
    if (t.back() != ')') fail(ErrorCode::InvalidConfig, "malformed alpha spec '" + spec + "'");
    return t.substr(open + 1, t.size() - open - 2);
  };
  if (t.rfind("const(", 0) == 0) {
    const double v = parse_angle_expr(args_of(5));
    return [v](double) { return v; };
  }
  if (t.rfind("linear(", 0) == 0) {
    const std::string args = args_of(6);
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      fail(ErrorCode::InvalidConfig, "linear(...) needs two arguments");
    const double a = parse_angle_expr(args.substr(0, comma));
    const double b = parse_angle_expr(args.substr(comma + 1));
    return [a, b](double u) { return a * u + b; };
  }
  fail(ErrorCode::InvalidConfig, "unknown alpha spec '" + spec + "' (use const(x) or linear(a,b))");
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidConfig, "cannot read " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::InvalidConfig, "bad JSON in " + path + ": " + e.what());
  }
  return j;
}

template <class VecT>
std::vector<VecT> parse_points(const json& j, int dim) {
  std::vector<VecT> pts;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(ErrorCode::InvalidConfig, "curve file: each point needs " + std::to_string(dim) +
                                         " coordinates");
    VecT p;
    for (int k = 0; k < dim; ++k) p[k] = row[k].get<double>();
    pts.push_back(p);
  }
  return pts;
}

std::map<std::string, double> parse_params(const json& j) {
  std::map<std::string, double> params;
  for (auto it = j.begin(); it != j.end(); ++it) params[it.key()] = it.value().get<double>();
  return params;
}

}  // namespace

SpaceCurve load_space_curve_file(const std::string& path, int n) {
  json j = read_json_file(path);
  const std::string kind = j.value("kind", "");
  if (kind == "samples") {
    const bool closed = j.value("closed", false);
    return resample_by_arclength(parse_points<Vec3>(j.at("points"), 3),
                                 n > 0 ? n : defaults().resolution, closed);
  }
  if (kind == "analytic")
    return make_space_example(j.at("name").get<std::string>(),
                              j.contains("params") ? parse_params(j.at("params"))
                                                   : std::map<std::string, double>{},
                              n);
  fail(ErrorCode::InvalidConfig, "curve file: kind must be 'samples' or 'analytic'");
}

PlaneCurve load_plane_curve_file(const std::string& path, int n) {
  json j = read_json_file(path);
  const std::string kind = j.value("kind", "");
  if (kind == "samples") {
    const bool closed = j.value("closed", false);
    return resample_plane_by_arclength(parse_points<Vec2>(j.at("points"), 2),
                                       n > 0 ? n : defaults().resolution, closed);
  }
  if (kind == "analytic")
    return make_plane_example(j.at("name").get<std::string>(),
                              j.contains("params") ? parse_params(j.at("params"))
                                                   : std::map<std::string, double>{},
                              n);
  fail(ErrorCode::InvalidConfig, "curve file: kind must be 'samples' or 'analytic'");
}

void load_job_json(const std::string& path, JobConfig& cfg) {
  json j = read_json_file(path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "command")
      cfg.command = it.value().get<std::string>();
    else if (k == "example")
      cfg.example = it.value().get<std::string>();
    else if (k == "curve_file")
      cfg.curve_file = it.value().get<std::string>();
    else if (k == "alpha")
      cfg.alpha = it.value().get<std::string>();
    else if (k == "mu_example")
      cfg.mu_example = it.value().get<std::string>();
    else if (k == "mu_file")
      cfg.mu_file = it.value().get<std::string>();
    else if (k == "n")
      cfg.n = it.value().get<int>();
    else if (k == "eps")
      cfg.eps = it.value().get<double>();
    else if (k == "grid_b")
      cfg.grid_b = it.value().get<int>();
    else if (k == "b_values")
      cfg.b_values = it.value().get<std::vector<double>>();
    else if (k == "out")
      cfg.out = it.value().get<std::string>();
    else
      fail(ErrorCode::InvalidConfig, "unknown config key '" + k + "'");
  }
}

namespace {

void validate_config(const JobConfig& cfg) {
  static const std::vector<std::string> commands = {"build",   "isomers", "classify", "census",
                                                    "develop", "meanH",   "examples"};
  if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
    fail(ErrorCode::InvalidConfig, "unknown command '" + cfg.command + "'");
  if (cfg.n != 0 && (cfg.n < 16 || cfg.n > (1 << 20)))
    fail(ErrorCode::InvalidConfig, "n must be in [16, 2^20]");
  if (cfg.eps < 0.0) fail(ErrorCode::InvalidConfig, "eps must be non-negative");
  if (cfg.grid_b < 1 || cfg.grid_b > 64)
    fail(ErrorCode::InvalidConfig, "grid_b must be in [1, 64]");
  if (cfg.command != "examples" && cfg.command != "meanH") {
    if (cfg.example.empty() && cfg.curve_file.empty())
      fail(ErrorCode::InvalidConfig, "need --example or --curve-file");
  }
}

SpaceCurve resolve_space_curve(const JobConfig& cfg) {
  if (!cfg.curve_file.empty()) return load_space_curve_file(cfg.curve_file, cfg.n);
  std::string name;
  std::map<std::string, double> params;
  parse_example_spec(cfg.example, name, params);
  return make_space_example(name, params, cfg.n);
}

PlaneCurve resolve_generator(const JobConfig& cfg) {
  if (!cfg.mu_file.empty()) return load_plane_curve_file(cfg.mu_file, cfg.n);
  if (cfg.mu_example.empty())
    fail(ErrorCode::InvalidConfig, "census needs --mu-example or --mu-file");
  std::string name;
  std::map<std::string, double> params;
  parse_example_spec(cfg.mu_example, name, params);
  return make_plane_example(name, params, cfg.n);
}

DevelopableStrip strip_for_job(const JobConfig& cfg, const SpaceCurve& curve) {
  if (cfg.alpha.rfind("file:", 0) == 0) {
    const std::string path = cfg.alpha.substr(5);
    std::ifstream f(path);
    if (!f) fail(ErrorCode::InvalidConfig, "cannot read alpha file " + path);
    std::vector<double> a;
    double v;
    while (f >> v) a.push_back(v);
    if (static_cast<int>(a.size()) != curve.size())
      fail(ErrorCode::InvalidConfig, "alpha file has " + std::to_string(a.size()) +
                                         " samples, curve has " + std::to_string(curve.size()));
    return build_strip_from_samples(curve, a, cfg.eps, cfg.tol);
  }
  return build_strip(curve, parse_alpha_spec(cfg.alpha), cfg.eps, cfg.tol);
}

json stats(const std::vector<double>& v) {
  double lo = v[0], hi = v[0], mean = 0.0;
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    mean += x;
  }
  return json{{"min", lo}, {"max", hi}, {"mean", mean / v.size()}};
}

json curve_symmetry_json(const CurveSymmetryReport& cs) {
  json syms = json::array();
  for (const auto& s : cs.symmetries)
    syms.push_back(json{{"sign", s.sign()},
                        {"sigma", s.action.sigma},
                        {"shift", s.action.d}});
  return json{{"planar", cs.is_planar},
              {"circle", cs.is_circle},
              {"infinite", cs.infinite},
              {"trivial_symmetry", cs.has_trivial_symmetry},
              {"positive_symmetry", cs.has_positive_symmetry},
              {"negative_symmetry", cs.has_negative_symmetry},
              {"nontrivial", syms}};
}

json mu_symmetry_json(const FunctionSymmetryReport& ms) {
  json actions = json::array();
  for (const auto& a : ms.actions)
    actions.push_back(json{{"sigma", a.sigma}, {"shift", a.d}, {"residual", a.residual}});
  return json{{"has_symmetry", ms.has_symmetry},
              {"infinite", ms.infinite},
              {"actions", actions},
              {"best_residual", ms.best_residual}};
}

std::string emit(const JobConfig& cfg, JobResult& res, const std::string& name,
                 const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out);
  const std::string path = (fs::path(cfg.out) / name).string();
  io::write_file(path, content);
  res.files.push_back(path);
  return path;
}

JobResult run_examples() {
  JobResult res;
  std::ostringstream os;
  os << "built-in examples (name: kind, parameters -- description)\n";
  for (const auto& e : example_registry()) {
    os << "  " << e.name << ": " << (e.is_plane ? "plane" : "space") << " curve, "
       << (e.closed ? "closed" : "open");
    if (!e.params.empty()) {
      os << ", params";
      for (const auto& [k, v] : e.params) os << " " << k << "=" << v;
    }
    os << "\n      " << e.description << "\n";
  }
  res.summary = os.str();
  return res;
}

JobResult run_build(const JobConfig& cfg) {
  JobResult res;
  SpaceCurve curve = resolve_space_curve(cfg);
  DevelopableStrip f = strip_for_job(cfg, curve);
  StripMesh mesh = sample_mesh(f, 0, 1.0, -1.0, cfg.tol);
  emit(cfg, res, "strip.obj", io::obj_from_mesh(mesh));
  json rep{{"command", "build"},
           {"example", cfg.example},
           {"n", curve.size()},
           {"length", curve.length},
           {"closed", curve.closed},
           {"width", f.width},
           {"admissible", is_admissible(f, cfg.tol)},
           {"alpha", stats(f.alpha)},
           {"beta", stats(f.beta)},
           {"mu", stats(f.mu)},
           {"mean_curvature", stats(mean_curvature_along_crease(f))},
           {"max_angle_defect", mesh.max_angle_defect}};
  emit(cfg, res, "strip_report.json", rep.dump(2) + "\n");
  std::ostringstream os;
  os << "strip built: n=" << curve.size() << " length=" << curve.length
     << " admissible=" << (is_admissible(f, cfg.tol) ? "yes" : "no")
     << " max_angle_defect=" << mesh.max_angle_defect;
  res.summary = os.str();
  return res;
}

JobResult run_isomers(const JobConfig& cfg) {
  JobResult res;
  SpaceCurve curve = resolve_space_curve(cfg);
  if (curve.closed)
    fail(ErrorCode::NotInterval, "isomer quartets are defined for interval creases");
  DevelopableStrip f = strip_for_job(cfg, curve);
  IsomerQuartet q = make_quartet(f, cfg.tol);
  json members = json::array();
  for (int i = 0; i < 4; ++i) {
    const DevelopableStrip& s = q[i];
    emit(cfg, res, std::string("isomer_") + IsomerQuartet::name(i) + ".obj",
         io::obj_from_mesh(sample_mesh(s, 0, 1.0, -1.0, cfg.tol)));
    members.push_back(json{{"name", IsomerQuartet::name(i)},
                           {"alpha", stats(s.alpha)},
                           {"admissible", is_admissible(s, cfg.tol)}});
  }
  // Right-equivalence classes among the four.
  std::vector<int> cls(4, -1);
  int next = 0;
  for (int i = 0; i < 4; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (int j = i + 1; j < 4; ++j)
      if (right_equivalent(q[i], q[j], cfg.tol)) cls[j] = next;
    ++next;
  }
  json rep{{"command", "isomers"},
           {"example", cfg.example},
           {"members", members},
           {"right_equivalence_classes", next},
           {"class_of", cls}};
  emit(cfg, res, "isomers_report.json", rep.dump(2) + "\n");
  res.summary = "isomer quartet built: " + std::to_string(next) + " right-equivalence classes";
  return res;
}

JobResult run_classify(const JobConfig& cfg) {
  JobResult res;
  SpaceCurve curve = resolve_space_curve(cfg);
  DevelopableStrip f = strip_for_job(cfg, curve);
  CongruenceReport rep = classify_quartet(f, cfg.tol);
  json pairwise = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(rep.pairwise[i][j]);
    pairwise.push_back(row);
  }
  json out{{"command", "classify"},
           {"example", cfg.example},
           {"n_right_classes", rep.n_right_classes},
           {"n_congruence_classes", rep.n_congruence_classes},
           {"fired_case", theorem_case_name(rep.fired_case)},
           {"satisfied_cases",
            [&] {
              json arr = json::array();
              for (auto c : rep.satisfied_cases) arr.push_back(theorem_case_name(c));
              return arr;
            }()},
           {"pairwise_congruent", pairwise},
           {"oracle_classes", rep.oracle_classes},
           {"oracle_agrees", rep.oracle_agrees},
           {"curve_symmetries", curve_symmetry_json(rep.curve_symmetries)},
           {"mu_symmetries", mu_symmetry_json(rep.mu_symmetries)},
           {"evidence", rep.evidence}};
  emit(cfg, res, "classify_report.json", out.dump(2) + "\n");
  std::ostringstream os;
  os << "n=" << rep.n_right_classes << " N=" << rep.n_congruence_classes
     << " case=" << theorem_case_name(rep.fired_case) << " oracle=" << rep.oracle_classes
     << (rep.oracle_agrees ? " (agrees)" : " (DISAGREES)");
  res.summary = os.str();
  if (!rep.oracle_agrees) res.exit_code = 1;
  return res;
}

JobResult run_develop(const JobConfig& cfg) {
  JobResult res;
  SpaceCurve curve = resolve_space_curve(cfg);
  DevelopableStrip f = strip_for_job(cfg, curve);
  OrigamiMap om = build_origami_map(f, cfg.tol);
  const PlaneCurve& pat = om.crease_pattern;
  emit(cfg, res, "pattern.svg",
       io::svg_from_pattern(pat, om.beta_left, om.beta_right, 0.5 * f.width,
                            std::max(1, pat.size() / 64)));
  std::vector<std::vector<double>> cols(6);
  for (int i = 0; i < pat.size(); ++i) {
    cols[0].push_back(pat.s[i]);
    cols[1].push_back(pat.point[i].x());
    cols[2].push_back(pat.point[i].y());
    cols[3].push_back(pat.mu[i]);
    if (i < f.size()) {
      cols[4].push_back(om.beta_left[i]);
      cols[5].push_back(om.beta_right[i]);
    } else {  // closed creases develop with one extra wrap sample
      cols[4].push_back(om.beta_left[0]);
      cols[5].push_back(om.beta_right[0]);
    }
  }
  emit(cfg, res, "pattern.csv",
       io::csv_from_columns({"s", "x", "y", "mu", "beta_left", "beta_right"}, cols));
  std::ostringstream os;
  os << "crease pattern developed: length=" << pat.length
     << " simple=" << (has_self_intersections(pat) ? "no" : "yes");
  res.summary = os.str();
  return res;
}

JobResult run_census(const JobConfig& cfg) {
  JobResult res;
  SpaceCurve curve = resolve_space_curve(cfg);
  if (!curve.closed) fail(ErrorCode::NotClosed, "census needs a closed crease");
  PlaneCurve gen = resolve_generator(cfg);

  // Scale the generator so its length matches the crease, then transplant
  // its curvature onto the crease.
  const double k = curve.length / gen.length;
  ScalarInterpolator gmu(gen.mu, gen.length, gen.closed);
  std::vector<double> mu(curve.size()), alpha(curve.size());
  double mu_max = 0.0, kap_min = 1e300;
  for (int i = 0; i < curve.size(); ++i) {
    mu[i] = gmu.eval(curve.s[i] / k) / k;
    mu_max = std::max(mu_max, std::abs(mu[i]));
    kap_min = std::min(kap_min, curve.kappa[i]);
    if (std::abs(mu[i]) >= curve.kappa[i])
      fail(ErrorCode::IncompatibleCurve, "generator curvature exceeds crease curvature");
    alpha[i] = std::acos(mu[i] / curve.kappa[i]);
  }
  DevelopableStrip F = build_strip_from_samples(curve, alpha, cfg.eps, cfg.tol, mu);
  ClosedCensus census = classify_closed(F, cfg.grid_b, cfg.tol);

  // CSV: pairwise congruence matrix with (index, shift) labels.
  std::string csv = "index_i,shift_i,index_j,shift_j,congruent\n";
  char buf[128];
  const int m = static_cast<int>(census.members.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::snprintf(buf, sizeof(buf), "%d,%.9g,%d,%.9g,%d\n", census.members[i].index,
                    census.members[i].shift, census.members[j].index, census.members[j].shift,
                    census.congruent[i][j] ? 1 : 0);
      csv += buf;
    }
  emit(cfg, res, "census.csv", csv);

  json rep{{"command", "census"},
           {"example", cfg.example},
           {"mu_example", cfg.mu_example},
           {"members", m},
           {"classes", census.n_classes},
           {"class_of", census.class_of},
           {"curve_symmetries", census.curve_symmetry_count},
           {"mu_symmetry_actions", census.mu_action_count},
           {"class_sizes_bounded", census.class_sizes_bounded},
           {"all_distinct", census.all_distinct},
           {"generator_scale", k},
           {"min_kappa", kap_min},
           {"max_mu", mu_max},
           {"two_pi_over_length", 2.0 * kPi / curve.length}};

  // Explicitly requested base-point shifts (family 1) compared pairwise.
  if (!cfg.b_values.empty()) {
    std::vector<ClosedFamilyMember> picked;
    for (double b : cfg.b_values) picked.push_back(closed_family(F, 1, b, cfg.tol));
    std::vector<const DevelopableStrip*> ptrs;
    for (const auto& mref : picked) ptrs.push_back(&mref.strip);
    auto cs = detect_curve_symmetries(curve, cfg.tol);
    auto mat = congruence_matrix(ptrs, cs.congruence_candidates(), cfg.tol);
    json jm = json::array();
    bool distinct = true;
    for (size_t i = 0; i < mat.size(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < mat.size(); ++j) {
        row.push_back(static_cast<bool>(mat[i][j]));
        if (i != j && mat[i][j]) distinct = false;
      }
      jm.push_back(row);
    }
    rep["picked_shifts"] = cfg.b_values;
    rep["picked_congruent"] = jm;
    rep["picked_all_distinct"] = distinct;
  }
  emit(cfg, res, "census_report.json", rep.dump(2) + "\n");
  std::ostringstream os;
  os << "census: " << m << " members, " << census.n_classes << " congruence classes"
     << (census.all_distinct ? " (all distinct)" : "");
  res.summary = os.str();
  return res;
}

JobResult run_meanH(const JobConfig& cfg) {
  JobResult res;
  SpaceCurve curve = resolve_space_curve(cfg);
  if (curve.closed) fail(ErrorCode::NotInterval, "the torsion solver works on interval data");
  ScalarInterpolator kint(curve.kappa, curve.length, false);
  auto alpha = parse_alpha_spec(cfg.alpha);
  auto sol = equal_mean_curvature_torsion([&](double s) { return kint.eval(s); }, alpha,
                                          curve.length, cfg.n > 0 ? cfg.n : curve.size(),
                                          cfg.tol);
  std::vector<std::vector<double>> cols(2);
  for (int i = 0; i < sol.F.size(); ++i) {
    cols[0].push_back(sol.curve.s[i]);
    cols[1].push_back(sol.tau[i]);
  }
  emit(cfg, res, "tau.csv", io::csv_from_columns({"s", "tau"}, cols));
  emit(cfg, res, "meanH_F.obj", io::obj_from_mesh(sample_mesh(sol.F, 0, 1.0, -1.0, cfg.tol)));
  emit(cfg, res, "meanH_F1.obj", io::obj_from_mesh(sample_mesh(sol.F1, 0, 1.0, -1.0, cfg.tol)));
  CongruenceReport crep = classify_quartet(sol.F, cfg.tol);
  json rep{{"command", "meanH"},
           {"example", cfg.example},
           {"length_used", sol.length_used},
           {"tau_at_zero", sol.tau_at_zero},
           {"max_H_residual", sol.max_H_residual},
           {"max_quadratic_residual", sol.max_quadratic_residual},
           {"n_congruence_classes", crep.n_congruence_classes},
           {"oracle_agrees", crep.oracle_agrees}};
  emit(cfg, res, "meanH_report.json", rep.dump(2) + "\n");
  std::ostringstream os;
  os << "torsion solved on length " << sol.length_used << ": sup|H-H1|=" << sol.max_H_residual
     << ", quartet classes=" << crep.n_congruence_classes;
  res.summary = os.str();
  return res;
}

}  // namespace

JobResult run_job(const JobConfig& cfg) {
  validate_config(cfg);
  if (cfg.command == "examples") return run_examples();
  if (cfg.command == "build") return run_build(cfg);
  if (cfg.command == "isomers") return run_isomers(cfg);
  if (cfg.command == "classify") return run_classify(cfg);
  if (cfg.command == "develop") return run_develop(cfg);
  if (cfg.command == "census") return run_census(cfg);
  return run_meanH(cfg);
}

}  // namespace curvefold
