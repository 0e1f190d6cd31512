#pragma once

#include <string>

namespace mahlervol {

// Parsed command line, filled by the argv front end.
struct RunConfig {
  std::string command;         // measure, roots, polygons, verify, sweep, apoly, svg
  int m = 0;
  int n = 0;
  double t = 1.0;
  double t_lo = 0.1;
  double t_hi = 5.0;
  int steps = 64;
  double tol = 1e-10;
  std::string output_path;     // empty: stdout
  std::string out_dir = ".";   // svg target directory
  std::string format = "json"; // json or csv where supported
};

// Executes one subcommand. Success returns 0 and writes the report to the
// configured destination. Failures print a one-line JSON error object to
// stderr and return 1 (domain), 2 (accuracy), or 3 (I/O).
int run_cli(const RunConfig& cfg);

}  // namespace mahlervol
