#pragma once

#include <vector>

#include "mahlervol/spectrum.hpp"

namespace mahlervol {

enum class EndpointKind { origin, root, semicircle_end };

// A maximal subinterval of (0, pi) on which the boundary function is positive.
struct Arc {
  double start = 0.0;
  double end = 0.0;
  EndpointKind start_kind = EndpointKind::origin;
  EndpointKind end_kind = EndpointKind::semicircle_end;
  int start_root_index = 0;    // 1-based root index when the kind is root
  int end_root_index = 0;
};

struct ArcDecomposition {
  std::vector<Arc> arcs;       // disjoint, ascending
};

// Splits (0, pi) at the scanned roots and keeps the cells where the boundary
// function is positive (midpoint test). Consecutive cells must alternate sign
// across each root; disagreement means the root list does not belong to these
// parameters and raises internal_error.
ArcDecomposition arc_decomposition(const FamilyParams& p, const RootScan& scan);

struct MeasureReport {
  double total = 0.0;          // log_term + dilog_term + arg_term, exactly
  double log_term = 0.0;       // log t
  double dilog_term = 0.0;     // Clausen antiderivative summed over arcs, / pi
  double arg_term = 0.0;       // -(log t / pi) * total arc length
  RootScan scan;
  ArcDecomposition arcs;
  bool tangency_warning = false;
};

// Mahler measure by the exact antiderivative: each positive arc [a, b]
// contributes Psi(b) - Psi(a) with Psi(theta) = Cl2(m theta)/m - Cl2(n theta)/n.
// With no arcs the result is exactly log t.
MeasureReport closed_form_measure(const FamilyParams& p);

struct QuadratureOptions {
  double abs_tol = 1e-10;      // on the measure itself; must be >= 1e-12
  long long max_panels = 200000;
};

// Mahler measure by adaptive quadrature of the Jensen integrand
// max(0, log|2 sin(n theta/2)| - log|2 t sin(m theta/2)|) / pi, plus log t.
// Breakpoints are forced at the unit roots and at the integrand poles.
double quadrature_measure(const FamilyParams& p, const QuadratureOptions& opt = {});

// Mahler measure of a + b x + c y for positive reals, by the closed form:
// inside the triangle range it is (D(|a/b| e^{i gamma}) + alpha log a
// + beta log b + gamma log c)/pi with the angles opposite the sides, and
// log max(a, b, c) otherwise. Continuous across the degenerate boundary.
double cassaigne_maillot(double a, double b, double c);

}  // namespace mahlervol
