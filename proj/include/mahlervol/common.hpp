#pragma once

#include <stdexcept>
#include <string>

namespace mahlervol {

// Caller-side misuse: parameters outside the supported domain, malformed input
// objects, tolerances tighter than the implementation certifies.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested tolerance could not be met within the work budget. Carries the
// best available estimate together with a bound on its error.
struct accuracy_error : std::runtime_error {
  double best_estimate;
  double error_bound;
  accuracy_error(const std::string& msg, double best, double bound)
      : std::runtime_error(msg), best_estimate(best), error_bound(bound) {}
};

// A cross-check inside the library failed. Indicates a bug, not caller error.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Filesystem failure while writing reports or figures.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mahlervol
