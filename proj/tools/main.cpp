#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cuspforge/config.hpp"
#include "cuspforge/runner.hpp"

namespace {

struct SubDesc {
  const char* name;
  const char* help;
};

constexpr SubDesc kSubcommands[] = {
    {"cusp", "cusp metric: curvature sign, volume, completeness"},
    {"curvature", "plane curvature bounds / graph surface curvature mass"},
    {"smooth", "kink smoothing: jet matching and convexity"},
    {"assemble", "graph-of-blocks assembly: volume and completeness series"},
    {"plan-growth", "greedy truncation planner under a curvature budget"},
    {"cgvd", "curvature-growth volume-decay diagnostic"},
    {"geodesic", "geodesic integration and conservation drift"},
    {"visibility", "connecting geodesics between escaping rays"},
    {"invisibility", "far-angle lower bound on a graph surface"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuspforge: construction and verification toolkit for "
               "finite-volume negatively curved spaces"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  double tol_override = 0.0;
  unsigned long long seed = 20240901ULL;
  int threads = 1;

  app.add_option("--config", config_path, "path to a key = value config file");
  app.add_option("--out", out_dir, "output directory for CSV/SVG artifacts");
  auto* tol_opt =
      app.add_option("--tol", tol_override,
                     "override the config tolerance (within [1e-12, 1e-4])");
  app.add_option("--seed", seed, "seed for randomized probe points");
  app.add_option("--threads", threads, "worker threads for sweep cells");

  for (const auto& sub : kSubcommands) {
    auto* s = app.add_subcommand(sub.name, sub.help);
    s->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  const std::string sub = app.get_subcommands().front()->get_name();

  std::string text;
  if (!config_path.empty()) {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot read config file: " << config_path << "\n";
      return 1;
    }
    std::ostringstream os;
    os << f.rdbuf();
    text = os.str();
  }

  cuspforge::ParseResult parsed = cuspforge::parse_config(text, sub);
  if (tol_opt->count() > 0) {
    if (!(tol_override >= 1e-12 && tol_override <= 1e-4)) {
      std::cerr << "--tol must lie in [1e-12, 1e-4]\n";
      return 1;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", tol_override);
    parsed.config.values["tol"] = buf;
  }
  if (!parsed.ok()) {
    for (const auto& issue : parsed.issues)
      std::cerr << issue.render() << "\n";
    return 1;
  }

  cuspforge::RunOptions opts;
  opts.out_dir = out_dir;
  if (tol_opt->count() > 0) opts.tol = tol_override;
  opts.seed = seed;
  opts.threads = threads;
  return cuspforge::run(parsed.config, opts, std::cout);
}
