#pragma once

#include <iosfwd>
#include <string>

#include "cuspforge/config.hpp"

namespace cuspforge {

struct RunOptions {
  std::string out_dir = ".";
  double tol = 1e-8;
  unsigned long long seed = 20240901ULL;
  int threads = 1;
};

// Dispatches a validated config to its experiment, writes CSV/SVG artifacts
// under out_dir, and prints a final machine-readable line
//   RESULT <subcommand> <pass|fail> key=value ...
// Returns the process exit status: 0 success, 2 verification failure,
// 1 error.
int run(const RunConfig& config, const RunOptions& opts, std::ostream& out);

}  // namespace cuspforge
