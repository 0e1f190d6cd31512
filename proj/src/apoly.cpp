#include "mahlervol/apoly.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "mahlervol/mahler.hpp"
#include "mahlervol/quadrature.hpp"

namespace mahlervol {
namespace {

constexpr double pi = std::numbers::pi;

void check_exponents(int m, int n) {
  if (m < 1 || n < 1)
    throw domain_error("exponent system: exponents must be positive");
  if (m == n) throw domain_error("exponent system: exponents must differ");
  if (std::gcd(m, n) != 1)
    throw domain_error("exponent system: exponents must be coprime");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  // extended Euclid; gcd(a, mod) = 1 is guaranteed by the caller
  std::int64_t r0 = mod, r1 = a % mod, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return ((s0 % mod) + mod) % mod;
}

ExponentSystem assemble(int m, int n, std::int64_t alpha, std::int64_t beta) {
  ExponentSystem sys;
  sys.m = m;
  sys.n = n;
  sys.alpha = alpha;
  sys.beta = beta;
  sys.k = m + n;
  int k = sys.k;
  int w1 = 0, z1 = m;                       // shape column of w_1 and z_1
  std::int64_t kappa = std::int64_t(m) * n * k;
  sys.U.assign(k + 2, std::vector<std::int64_t>(2 * k, 0));

  // meridian deformation: w_1^alpha z_1^beta
  sys.U[0][w1] = alpha;
  sys.U[0][z1] = beta;
  // longitude: w_1^{-kappa alpha} z_1^{-kappa beta} times the full
  // (1 - w)^{2n} and (1 - z)^{-2m} blocks
  sys.U[1][w1] = -kappa * alpha;
  sys.U[1][z1] = -kappa * beta;
  for (int j = 0; j < m; ++j) sys.U[1][k + j] = 2 * n;
  for (int j = 0; j < n; ++j) sys.U[1][k + m + j] = -2 * m;
  // gluing: the product of all shapes is 1
  for (int j = 0; j < k; ++j) sys.U[2][j] = 1;
  // shape identifications inside each family
  for (int j = 1; j < m; ++j) {
    sys.U[2 + j][w1] = 1;
    sys.U[2 + j][w1 + j] = -1;
  }
  for (int j = 1; j < n; ++j) {
    sys.U[1 + m + j][z1] = 1;
    sys.U[1 + m + j][z1 + j] = -1;
  }
  return sys;
}

}  // namespace

ExponentSystem build_system(int m, int n) {
  check_exponents(m, n);
  std::int64_t alpha = (m == 1) ? 1 : mod_inverse(n % m, m);
  std::int64_t beta = (std::int64_t(n) * alpha - 1) / m;
  return build_system(m, n, alpha, beta);
}

ExponentSystem build_system(int m, int n, std::int64_t alpha,
                            std::int64_t beta) {
  check_exponents(m, n);
  if (std::int64_t(n) * alpha - std::int64_t(m) * beta != 1)
    throw domain_error("build_system: n alpha - m beta = 1 is required");
  return assemble(m, n, alpha, beta);
}

bool check_neumann_zagier(const ExponentSystem& sys) {
  int k = sys.k;
  if (k != sys.m + sys.n || int(sys.U.size()) != k + 2) return false;
  for (const auto& row : sys.U)
    if (int(row.size()) != 2 * k) return false;
  // <u, v> = sum_i u_i v_{k+i} - u_{k+i} v_i must be 2 exactly for the
  // (row0, row1) pair and 0 elsewhere
  for (size_t i = 0; i < sys.U.size(); ++i) {
    for (size_t j = 0; j < sys.U.size(); ++j) {
      std::int64_t pair = 0;
      for (int c = 0; c < k; ++c)
        pair += sys.U[i][c] * sys.U[j][k + c] - sys.U[i][k + c] * sys.U[j][c];
      std::int64_t want = 0;
      if (i == 0 && j == 1) want = 2;
      if (i == 1 && j == 0) want = -2;
      if (pair != want) return false;
    }
  }
  return true;
}

std::vector<IdentitySolution> identity_solutions(int m, int n) {
  check_exponents(m, n);
  int p = m + n;
  int q = std::abs(n - m);
  int d = p * q;
  std::vector<IdentitySolution> out;
  for (int a = 0; a < d; ++a) {
    bool sum_family = a % q == 0;    // u^p = 1
    bool diff_family = a % p == 0;   // u^q = 1
    if (!sum_family && !diff_family) continue;
    IdentitySolution sol;
    sol.arg_u = 2.0 * pi * a / d;
    sol.u = std::polar(1.0, sol.arg_u);
    sol.w = std::polar(1.0, 2.0 * pi * a * n / double(d));
    sol.z = std::polar(1.0, -2.0 * pi * a * m / double(d));
    sol.degenerate = (a == 0);       // only u = 1 kills a 1 - w or 1 - z factor
    sol.in_sum_family = sum_family;
    sol.in_diff_family = diff_family;
    if (!sol.degenerate) {
      double lw = std::abs(1.0 - sol.w), lz = std::abs(1.0 - sol.z);
      if (std::abs(lw - lz) > 1e-12)
        throw internal_error("identity_solutions: modulus equation violated");
    }
    out.push_back(sol);
  }
  // cross-check the count: |mu_p union mu_q| = p + q - gcd(p, q)
  if (int(out.size()) != p + q - std::gcd(p, q))
    throw internal_error("identity_solutions: wrong solution count");
  return out;
}

TildeCheck tilde_measure_check(int m, int n, double quad_tol) {
  check_exponents(m, n);
  if (m + n > 9)
    throw domain_error("tilde_measure_check: supported only for m + n <= 9");
  if (!(quad_tol >= 1e-12))
    throw domain_error("tilde_measure_check: tolerance below 1e-12");

  TildeCheck res;
  QuadratureOptions opt;
  opt.abs_tol = quad_tol;
  res.lhs = double(m) * n * quadrature_measure(make_family(m, n, 1.0), opt);

  // measure of the degree-scaled polynomial: the same Jensen integral with
  // theta stretched by 1/(m n), which turns the integrand into
  // max(0, log|sin(n theta)| - log|sin(m theta)|) over (0, pi)
  auto integrand = [m, n](double theta) {
    double sn = std::abs(std::sin(n * theta));
    double sm = std::abs(std::sin(m * theta));
    if (sn == 0.0) return 0.0;
    if (sm == 0.0) return 709.0;
    double v = std::log(sn) - std::log(sm);
    return v > 0.0 ? v : 0.0;
  };
  std::vector<double> cuts{0.0, pi};
  for (int j = 1; j < m; ++j) cuts.push_back(pi * j / m);
  for (int j = 1; j < n; ++j) cuts.push_back(pi * j / n);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-13; }),
             cuts.end());
  QuadratureResult r =
      integrate_adaptive(integrand, cuts, quad_tol * pi, 400000);
  res.rhs = double(m) * n * r.value / pi;
  res.residual = std::abs(res.lhs - res.rhs);
  return res;
}

}  // namespace mahlervol
