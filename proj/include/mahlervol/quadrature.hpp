#pragma once

#include <functional>
#include <vector>

namespace mahlervol {

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
  long long panels = 0;         // accepted panels
};

// Adaptive Gauss-Kronrod 7-15 over the union of [breakpoints[i], breakpoints[i+1]].
// Breakpoints must be finite and strictly increasing; integrable endpoint
// singularities are fine because no node touches a panel endpoint. The panel
// with the worst error bound is split first (position-tiebroken), and the
// compensated summation order is fixed, so results are deterministic. Throws
// accuracy_error when the panel budget runs out before the summed bound
// reaches the absolute tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& breakpoints,
                                    double abs_tol,
                                    long long max_panels = 200000);

}  // namespace mahlervol
