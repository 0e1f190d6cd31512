#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mahlervol/common.hpp"

namespace mahlervol {

// Integer exponent matrix of the gluing and deformation equations for the
// triangulation with k = m + n ideal tetrahedra. Columns are ordered
// w_1..w_m, z_1..z_n, then the same shapes again as (1 - w_1)..(1 - z_n).
// Row 0 carries the meridian deformation (w_1^alpha z_1^beta), row 1 the
// longitude equation, row 2 the global gluing product, and the remaining
// k - 2 rows the shape identifications w_1 w_j^{-1} and z_1 z_j^{-1}.
struct ExponentSystem {
  int m = 0;
  int n = 0;
  std::int64_t alpha = 0;      // n alpha - m beta = 1
  std::int64_t beta = 0;
  int k = 0;                   // m + n
  std::vector<std::vector<std::int64_t>> U;   // (k + 2) rows, 2k columns
};

// Builds the system with the canonical representative: alpha = n^{-1} mod m
// in [1, m) for m >= 2, alpha = 1 and beta = n - 1 for m = 1.
ExponentSystem build_system(int m, int n);

// Same with an explicit unimodular representative; n alpha - m beta = 1 is
// required and checked.
ExponentSystem build_system(int m, int n, std::int64_t alpha, std::int64_t beta);

// Symplectic pairing test: U J U^T must vanish except for the 2x2 block
// <row0, row1> = 2 = -<row1, row0>, where J is the standard skew form pairing
// the shape columns with the (1 - shape) columns. Exact integer arithmetic.
bool check_neumann_zagier(const ExponentSystem& sys);

// A solution of the t = 1 consistency equations on the unit torus: u ranges
// over the union of the (m + n)-th and |n - m|-th roots of unity, with
// w = u^n and z = u^{-m}.
struct IdentitySolution {
  std::complex<double> u;
  std::complex<double> w;
  std::complex<double> z;
  double arg_u = 0.0;              // in [0, 2 pi)
  bool degenerate = false;         // u = 1: a 1 - w or 1 - z factor vanishes
  bool in_sum_family = false;      // u^(m+n) = 1
  bool in_diff_family = false;     // u^|n-m| = 1
};

// All identity solutions, ascending in arg u, degenerate ones flagged rather
// than dropped. The count is (m+n) + |n-m| - gcd(m+n, |n-m|).
std::vector<IdentitySolution> identity_solutions(int m, int n);

struct TildeCheck {
  double lhs = 0.0;            // m n * measure of the t = 1 family member
  double rhs = 0.0;            // measure of the pulled-back polynomial
  double residual = 0.0;
};

// Verifies m n * m(R_1) against the measure of the degree-scaled polynomial,
// both sides by quadrature. Guarded to m + n <= 9 to keep the second
// integrand's pole count small.
TildeCheck tilde_measure_check(int m, int n, double quad_tol = 1e-8);

}  // namespace mahlervol
