#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvefold/curve.hpp"

namespace curvefold {

// One CLI invocation: which command, which curve, which angular function,
// and where outputs go.  A JSON config file fills this first; command-line
// flags override individual fields.
struct JobConfig {
  std::string command;              // build | isomers | classify | census | develop | meanH | examples
  std::string example;              // named analytic input, e.g. "perturbed_helix(0.1)"
  std::string curve_file;           // JSON curve input (alternative to `example`)
  std::string alpha = "const(pi/4)";// const(x) | linear(a,b) | file:PATH
  std::string mu_example;           // census: plane-curve generator
  std::string mu_file;
  int n = 0;                        // samples (0: default resolution)
  double eps = 0.0;                 // band half-width (0: 0.05 * length)
  int grid_b = 8;                   // census: base-point grid
  std::vector<double> b_values;     // census: explicit shifts to compare
  std::string out = ".";
  Tolerances tol;
};

// "pi/24", "10pi/24", "-pi/3", "0.25", "2*pi" -> double.
double parse_angle_expr(const std::string& text);

// Alpha specification; the callable takes the curve's native parameter.
std::function<double(double)> parse_alpha_spec(const std::string& spec);

// JSON curve files: {"kind":"samples","dim":3,"closed":...,"points":[[...]]}
// or {"kind":"analytic","name":...,"params":{...}}.
SpaceCurve load_space_curve_file(const std::string& path, int n);
PlaneCurve load_plane_curve_file(const std::string& path, int n);

// Merge a JSON config file into `cfg`; unknown keys are rejected.
void load_job_json(const std::string& path, JobConfig& cfg);

struct JobResult {
  int exit_code = 0;
  std::vector<std::string> files;  // emitted files (absolute or out-relative)
  std::string summary;             // one-line human summary
};

// Execute the job; throws GeomError on invalid configs and geometric
// precondition failures (the CLI maps those to exit codes 2 / 3).
JobResult run_job(const JobConfig& cfg);

}  // namespace curvefold
