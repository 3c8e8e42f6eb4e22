// Command-line interface for constructing developable strips and curved
// foldings along a space curve, enumerating their isomers, and classifying
// congruence classes.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "curvefold/job.hpp"

using namespace curvefold;

int main(int argc, char** argv) {
  CLI::App app{"curvefold: developable strips and curved foldings along space curves"};
  app.require_subcommand(1);

  JobConfig cfg;
  if (const char* env = std::getenv("CURVEFOLD_OUT")) cfg.out = env;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override it)");
    sub->add_option("--example", cfg.example, "named example, e.g. helix or perturbed_helix(0.1)");
    sub->add_option("--curve-file", cfg.curve_file, "JSON curve input file");
    sub->add_option("--alpha", cfg.alpha, "const(x) | linear(a,b) | file:PATH; accepts pi fractions");
    sub->add_option("--n", cfg.n, "samples along the curve (default 2048)");
    sub->add_option("--eps", cfg.eps, "band half-width (default 0.05 * length)");
    sub->add_option("--out", cfg.out, "output directory (default: $CURVEFOLD_OUT or .)");
    return sub;
  };

  add_common(app.add_subcommand("build", "build one developable strip and export its mesh"));
  add_common(app.add_subcommand("isomers", "build the quartet F, dual, inverse, inverse dual"));
  add_common(app.add_subcommand("classify", "count right-equivalence and congruence classes"));
  add_common(app.add_subcommand("develop", "develop the crease pattern to SVG/CSV"));
  CLI::App* census = add_common(
      app.add_subcommand("census", "congruence census of the families over a closed crease"));
  census->add_option("--mu-example", cfg.mu_example, "plane-curve generator example");
  census->add_option("--mu-file", cfg.mu_file, "plane-curve generator file");
  census->add_option("--grid-b", cfg.grid_b, "number of base-point shifts (default 8)");
  census->add_option("--b", cfg.b_values, "explicit base-point shifts to compare");
  add_common(app.add_subcommand("meanH",
                                "solve for the torsion giving equal mean curvature profiles"));
  app.add_subcommand("examples", "list the built-in example curves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    if (!config_path.empty()) {
      // The config file fills defaults; explicit flags win.
      JobConfig from_file = cfg;
      load_job_json(config_path, from_file);
      from_file.command = cfg.command;
      auto keep = [&](const std::string& flag) { return sub->count(flag) > 0; };
      if (!keep("--example")) cfg.example = from_file.example;
      if (!keep("--curve-file")) cfg.curve_file = from_file.curve_file;
      if (!keep("--alpha")) cfg.alpha = from_file.alpha;
      if (!keep("--n")) cfg.n = from_file.n;
      if (!keep("--eps")) cfg.eps = from_file.eps;
      if (!keep("--out")) cfg.out = from_file.out;
      if (cfg.command == "census") {
        if (!keep("--mu-example")) cfg.mu_example = from_file.mu_example;
        if (!keep("--mu-file")) cfg.mu_file = from_file.mu_file;
        if (!keep("--grid-b")) cfg.grid_b = from_file.grid_b;
        if (!keep("--b")) cfg.b_values = from_file.b_values;
      }
    }
    JobResult res = run_job(cfg);
    std::cout << res.summary << "\n";
    for (const auto& f : res.files) std::cout << "wrote " << f << "\n";
    return res.exit_code;
  } catch (const GeomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidConfig ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
