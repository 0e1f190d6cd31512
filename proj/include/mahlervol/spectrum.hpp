#pragma once

#include <complex>
#include <vector>

#include "mahlervol/common.hpp"

namespace mahlervol {

// One member of the two-parameter family: exponents (m, n) coprime, m != n,
// both >= 1, and a positive scale t. Construct through make_family, which
// validates and takes |t| for nonpositive input conventions.
struct FamilyParams {
  int m = 0;
  int n = 0;
  double t = 0.0;
};

FamilyParams make_family(int m, int n, double t);

// A simple zero of the boundary function on the open upper unit semicircle.
struct UnitRoot {
  double sigma = 0.0;                    // angle in (0, pi)
  std::complex<double> alpha;            // exp(i sigma)
  int index = 0;                         // 1-based, ascending in sigma
};

struct RootScan {
  std::vector<UnitRoot> roots;           // crossing zeros, ascending
  std::vector<double> tangents;          // touch points without sign change,
                                         // including 0 or pi at exact thresholds
  bool near_threshold = false;           // tangents found, or a dip shallow
                                         // enough that the count is in doubt
};

// F(theta) = |1 - e^{i n theta}|^2 - t^2 |1 - e^{i m theta}|^2, evaluated in
// the cancellation-free form 4 sin^2(n theta/2) - 4 t^2 sin^2(m theta/2).
// The unit roots of the family are the zeros of F in (0, pi).
double boundary_value(const FamilyParams& p, double theta);

// All crossing zeros of F in (0, pi), each certified to |F(sigma)| <= 1e-12
// scale and located to machine width. Grid-doubling count stabilization plus
// bisection; near-tangent configurations are reported, not silently dropped.
RootScan find_unit_roots(const FamilyParams& p);

// The polynomial S with S(2 cos theta) = F(theta) / (2 - 2 cos theta) up to
// the common vanishing factor at theta = 0: S(M) = A(M) - t^2 B(M) where
// A = (2 - C_n)/(2 - M), B = (2 - C_m)/(2 - M) and C_j is the dilated
// Chebyshev polynomial with C_j(2 cos x) = 2 cos(j x). Coefficients ascending.
// Zeros of F in (0, pi) correspond exactly to zeros of S in (-2, 2) under
// M = 2 cos theta.
std::vector<double> reciprocal_reduction(const FamilyParams& p);

enum class ThresholdKind {
  root_count,   // number of unit roots changes as t crosses the event
  shape,        // a root crosses a case boundary j pi / m or j pi / n
};

struct ThresholdEvent {
  double t = 0.0;
  ThresholdKind kind = ThresholdKind::root_count;
  int count_before = 0;        // unit-root count just below the event
  int count_after = 0;         // and just above
  double sigma = 0.0;          // where on [0, pi] the event happens
  int boundary_index = 0;      // shape events: j in sigma = j pi / (n or m)
  bool tau_boundary = false;   // shape events: true for j pi / n, false for j pi / m
};

struct ThresholdScan {
  std::vector<ThresholdEvent> events;    // ascending in t, inside (t_lo, t_hi)
};

// Locates every t in (t_lo, t_hi) at which the root configuration changes,
// by closed-form event construction certified with local recounts. The steps
// parameter sizes the consistency sweep between events (>= 2).
ThresholdScan threshold_scan(int m, int n, double t_lo, double t_hi, int steps);

}  // namespace mahlervol
