#include "mahlervol/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace mahlervol {
namespace {

constexpr double pi = std::numbers::pi;

// Grid phase keeps roots at rational multiples of pi (the t = 1 and threshold
// configurations) off the sample nodes, where a sign test would be noise.
constexpr double kGridOffset = 0.2997924580;

void validate(const FamilyParams& p) {
  if (p.m < 1 || p.n < 1)
    throw domain_error("family: exponents must be positive");
  if (p.m == p.n) throw domain_error("family: exponents must differ");
  if (std::gcd(p.m, p.n) != 1)
    throw domain_error("family: exponents must be coprime");
  if (!std::isfinite(p.t) || p.t <= 0.0)
    throw domain_error("family: t must be finite and positive");
}

double amplitude(const FamilyParams& p) { return 4.0 + 4.0 * p.t * p.t; }

// F with the theta^2 factor removed; carries the correct sign of F on the
// first grid cell, where F itself vanishes quadratically at 0.
double origin_scaled(const FamilyParams& p, double theta) {
  if (theta == 0.0)
    return double(p.n) * p.n - p.t * p.t * double(p.m) * p.m;
  return boundary_value(p, theta) / (theta * theta);
}

double bisect(const std::function<double(double)>& f, double a, double b,
              double fa) {
  for (;;) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// One pass over an offset grid of N cells: crossing roots by sign change and
// bisection. The first and last cells fall back to the origin-scaled function
// and the exact endpoint value, and are skipped entirely when the endpoint
// sits at a tangency.
std::vector<double> scan_grid(const FamilyParams& p, int N, double s0,
                              bool tangent0, double fpi, bool tangent_pi) {
  std::vector<double> roots;
  auto F = [&p](double th) { return boundary_value(p, th); };
  auto G = [&p](double th) { return origin_scaled(p, th); };

  double a = pi * kGridOffset / N;
  double fa = F(a);
  // first cell [0, a]
  if (!tangent0 && fa != 0.0 && (s0 > 0.0) != (fa > 0.0))
    roots.push_back(bisect(G, 0.0, a, s0));
  for (int i = 1; i <= N; ++i) {
    double b = (i == N) ? pi : pi * (i + kGridOffset) / N;
    double fb = (i == N) ? fpi : F(b);
    bool skip = (i == N) && tangent_pi;
    if (!skip && fa != 0.0 && fb != 0.0 && (fa > 0.0) != (fb > 0.0))
      roots.push_back(bisect(F, a, b, fa));
    a = b;
    fa = fb;
  }
  return roots;
}

// Golden-section maximizer used to refine candidate dips: for a dip
// approaching zero from the s_out side, the refined extremum of -s_out * F
// tells apart a tangency (extremum ~ 0), a poked-through root pair
// (extremum > 0), and an ordinary shallow dip.
double refine_extremum(const FamilyParams& p, double a, double b,
                       double s_out) {
  auto g = [&](double x) { return -s_out * boundary_value(p, x); };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = g(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

FamilyParams make_family(int m, int n, double t) {
  FamilyParams p{m, n, std::abs(t)};
  if (t == 0.0 || !std::isfinite(t))
    throw domain_error("make_family: t must be finite and nonzero");
  validate(p);
  return p;
}

double boundary_value(const FamilyParams& p, double theta) {
  double sn = std::sin(0.5 * p.n * theta);
  double sm = std::sin(0.5 * p.m * theta);
  return 4.0 * sn * sn - 4.0 * p.t * p.t * sm * sm;
}

RootScan find_unit_roots(const FamilyParams& p) {
  validate(p);
  RootScan scan;
  double scale = amplitude(p);
  double s0 = double(p.n) * p.n - p.t * p.t * double(p.m) * p.m;
  bool tangent0 = std::abs(s0) <= 1e-9 * double(p.n) * p.n;
  double fpi = boundary_value(p, pi);
  bool both_odd = (p.m % 2 == 1) && (p.n % 2 == 1);
  bool tangent_pi = both_odd && std::abs(fpi) <= 1e-9 * scale;

  int N = 64 * (p.m + p.n);
  std::vector<double> roots;
  size_t last_count = 0;
  int stable = 0;
  int final_N = N;
  for (int iter = 0; iter < 8; ++iter, N *= 2) {
    roots = scan_grid(p, N, s0, tangent0, fpi, tangent_pi);
    final_N = N;
    if (iter > 0 && roots.size() == last_count)
      ++stable;
    else
      stable = 0;
    last_count = roots.size();
    if (stable >= 2) break;
  }

  // Dip scan on the final grid: interior |F| minima that do not change sign.
  // A dip that turns out to cross after refinement is a near-merged root pair
  // the cell grid was too coarse to see; resolve it into its two roots.
  double tangent_tol = 1e-9 * std::max(1.0, p.t * p.t);
  std::vector<double> dips;
  {
    int Nf = final_N;
    std::vector<double> th(Nf + 2), v(Nf + 2);
    th[0] = 0.0;
    v[0] = s0;
    for (int i = 0; i < Nf; ++i) {
      th[i + 1] = pi * (i + kGridOffset) / Nf;
      v[i + 1] = boundary_value(p, th[i + 1]);
    }
    th[Nf + 1] = pi;
    v[Nf + 1] = fpi;
    for (int i = 1; i <= Nf; ++i) {
      if (std::abs(v[i]) > 1e-3 * scale) continue;
      if (std::abs(v[i]) > std::abs(v[i - 1]) ||
          std::abs(v[i]) > std::abs(v[i + 1]))
        continue;
      if ((v[i - 1] > 0.0) != (v[i + 1] > 0.0)) continue;  // plain crossing pair
      double s_out = v[i - 1] > 0.0 ? 1.0 : -1.0;
      double star = refine_extremum(p, th[i - 1], th[i + 1], s_out);
      // F vanishes structurally at 0 and pi; a maximizer that ran into an
      // endpoint is that zero, not an interior tangency (endpoint tangencies
      // are certified separately through tangent0 and tangent_pi)
      if (star <= 1e-9 || star >= pi - 1e-9) continue;
      double fstar = boundary_value(p, star);
      if (fstar != 0.0 && (fstar > 0.0) != (s_out > 0.0)) {
        // the dip pokes through: two crossings inside this window
        auto F = [&p](double x) { return boundary_value(p, x); };
        roots.push_back(bisect(F, th[i - 1], star, v[i - 1]));
        roots.push_back(bisect(F, star, th[i + 1], fstar));
      } else if (std::abs(fstar) <= tangent_tol) {
        dips.push_back(star);
      } else if (std::abs(fstar) <= 1e-6 * scale) {
        scan.near_threshold = true;  // ambiguous dip, too deep to certify
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) {
                            return std::abs(x - y) < 1e-12;
                          }),
              roots.end());
  // keep dips distinct from located roots and from each other
  std::sort(dips.begin(), dips.end());
  for (double d : dips) {
    bool near_root = false;
    for (double r : roots)
      if (std::abs(d - r) < 1e-6) near_root = true;
    if (near_root) continue;
    if (!scan.tangents.empty() && std::abs(scan.tangents.back() - d) < 1e-8)
      continue;
    scan.tangents.push_back(d);
  }
  if (tangent0) scan.tangents.insert(scan.tangents.begin(), 0.0);
  if (tangent_pi) scan.tangents.push_back(pi);
  if (!scan.tangents.empty()) scan.near_threshold = true;

  for (double r : roots) {
    if (!(r > 0.0 && r < pi))
      throw internal_error("find_unit_roots: root escaped (0, pi)");
    if (std::abs(boundary_value(p, r)) > 1e-12 * std::max(1.0, scale))
      throw internal_error("find_unit_roots: certification failed");
  }
  // parity of the count must match the endpoint signs
  if (!tangent0 && !tangent_pi && !scan.near_threshold) {
    bool odd_expected = (s0 > 0.0) != (fpi > 0.0);
    if (odd_expected != (roots.size() % 2 == 1))
      throw internal_error("find_unit_roots: parity check failed");
  }

  for (size_t i = 0; i < roots.size(); ++i) {
    UnitRoot u;
    u.sigma = roots[i];
    u.alpha = std::polar(1.0, roots[i]);
    u.index = int(i) + 1;
    scan.roots.push_back(u);
  }
  return scan;
}

namespace {

using Poly = std::vector<double>;  // ascending coefficients

double horner(const Poly& c, double x) {
  double v = 0.0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

Poly derivative(const Poly& c) {
  Poly d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(double(i) * c[i]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// (2 - C_j(M)) / (2 - M) where C_j is the dilated Chebyshev polynomial,
// C_j(2 cos x) = 2 cos(j x). Integer coefficients, computed exactly: build
// 2 - C_j by the recurrence C_{k+1} = M C_k - C_{k-1}, then divide out the
// root at M = 2 synthetically.
Poly unit_kernel(int j) {
  Poly c0{2.0}, c1{0.0, 1.0};  // C_0, C_1
  for (int k = 1; k < j; ++k) {
    Poly next(k + 2, 0.0);
    for (size_t i = 0; i < c1.size(); ++i) next[i + 1] += c1[i];
    for (size_t i = 0; i < c0.size(); ++i) next[i] -= c0[i];
    c0 = c1;
    c1 = next;
  }
  Poly g(std::max<size_t>(c1.size(), 1), 0.0);  // 2 - C_j
  for (size_t i = 0; i < c1.size(); ++i) g[i] = -c1[i];
  g[0] += 2.0;
  // synthetic division by (M - 2); remainder must vanish identically
  Poly q(g.size() - 1, 0.0);
  double carry = g.back();
  for (size_t i = g.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = g[i] + 2.0 * carry;
  }
  if (std::abs(carry) > 1e-9)
    throw internal_error("unit_kernel: division by (2 - M) not exact");
  for (double& v : q) v = -v;  // (M - 2) q = g means (2 - M)(-q) = g
  return q;
}

}  // namespace

std::vector<double> reciprocal_reduction(const FamilyParams& p) {
  validate(p);
  Poly A = unit_kernel(p.n), B = unit_kernel(p.m);
  Poly s(std::max(A.size(), B.size()), 0.0);
  for (size_t i = 0; i < A.size(); ++i) s[i] += A[i];
  for (size_t i = 0; i < B.size(); ++i) s[i] -= p.t * p.t * B[i];
  while (s.size() > 1 && s.back() == 0.0) s.pop_back();
  return s;
}

namespace {

// Simple zeros of a polynomial on (lo, hi) by dense sampling plus bisection;
// adequate for the low-degree derivative combination used below.
std::vector<double> poly_roots_on(const Poly& c, double lo, double hi) {
  const int N = 8192;
  std::vector<double> out;
  double a = lo, fa = horner(c, a);
  for (int i = 1; i <= N; ++i) {
    double b = lo + (hi - lo) * i / N;
    double fb = horner(c, b);
    if (fa == 0.0) out.push_back(a);
    if (fa != 0.0 && fb != 0.0 && (fa > 0.0) != (fb > 0.0))
      out.push_back(bisect([&c](double x) { return horner(c, x); }, a, b, fa));
    a = b;
    fa = fb;
  }
  return out;
}

int root_count(int m, int n, double t) {
  return int(find_unit_roots(make_family(m, n, t)).roots.size());
}

}  // namespace

ThresholdScan threshold_scan(int m, int n, double t_lo, double t_hi,
                             int steps) {
  make_family(m, n, 1.0);  // parameter validation
  if (!(t_lo > 0.0) || !(t_hi > t_lo) || !std::isfinite(t_hi))
    throw domain_error("threshold_scan: need 0 < t_lo < t_hi");
  if (steps < 2) throw domain_error("threshold_scan: steps must be >= 2");

  struct Candidate {
    double t;
    ThresholdKind kind;
    double sigma;
    int boundary_index;
    bool tau_boundary;
  };
  std::vector<Candidate> cands;

  // endpoint exits: a root leaves through sigma = 0 at t = n/m, and through
  // sigma = pi at t = 1 when both exponents are odd
  cands.push_back({double(n) / m, ThresholdKind::root_count, 0.0, 0, false});
  if (m % 2 == 1 && n % 2 == 1)
    cands.push_back({1.0, ThresholdKind::root_count, pi, 0, false});

  // interior merges: stationary values of A/B on (-2, 2), i.e. zeros of
  // A'B - A B', give the t where a root pair collides
  Poly A = unit_kernel(n), B = unit_kernel(m);
  Poly W = multiply(derivative(A), B);
  Poly AdB = multiply(A, derivative(B));
  if (AdB.size() > W.size()) W.resize(AdB.size(), 0.0);
  for (size_t i = 0; i < AdB.size(); ++i) W[i] -= AdB[i];
  for (double mstar : poly_roots_on(W, -2.0 + 1e-9, 2.0 - 1e-9)) {
    double bv = horner(B, mstar);
    if (bv == 0.0) continue;
    double tt = horner(A, mstar) / bv;
    if (!(tt > 1e-18)) continue;
    cands.push_back({std::sqrt(tt), ThresholdKind::root_count,
                     std::acos(std::clamp(mstar / 2.0, -1.0, 1.0)), 0, false});
  }

  // shape events: a root crosses a case boundary j pi / m (eta side) or
  // j pi / n (tau side); only odd j can carry a root, and the t follows in
  // closed form from F(sigma*) = 0
  for (int j = 1; j < n; j += 2) {
    double sigma = pi * j / n;
    double t = 1.0 / std::abs(std::sin(0.5 * m * sigma));
    cands.push_back({t, ThresholdKind::shape, sigma, j, true});
  }
  for (int j = 1; j < m; j += 2) {
    double sigma = pi * j / m;
    double t = std::abs(std::sin(0.5 * n * sigma));
    cands.push_back({t, ThresholdKind::shape, sigma, j, false});
  }

  // certify each candidate by recounting on both sides
  const double delta = 1e-7;
  ThresholdScan scan;
  for (const Candidate& c : cands) {
    if (!(c.t > t_lo && c.t < t_hi)) continue;
    int before = root_count(m, n, c.t * (1.0 - delta));
    int after = root_count(m, n, c.t * (1.0 + delta));
    if (c.kind == ThresholdKind::root_count) {
      if (before == after) continue;  // spurious stationary value
    } else {
      if (before != after)
        throw internal_error("threshold_scan: shape event changed the count");
      // the crossing root must exist on both sides, close to sigma*
      for (double tt : {c.t * (1.0 - delta), c.t * (1.0 + delta)}) {
        auto rs = find_unit_roots(make_family(m, n, tt));
        double best = 1e9;
        for (const auto& r : rs.roots)
          best = std::min(best, std::abs(r.sigma - c.sigma));
        if (best > 1e-4)
          throw internal_error("threshold_scan: shape event lost its root");
      }
    }
    ThresholdEvent e;
    e.t = c.t;
    e.kind = c.kind;
    e.count_before = before;
    e.count_after = after;
    e.sigma = c.sigma;
    e.boundary_index = c.boundary_index;
    e.tau_boundary = c.tau_boundary;
    scan.events.push_back(e);
  }
  std::sort(scan.events.begin(), scan.events.end(),
            [](const ThresholdEvent& a, const ThresholdEvent& b) {
              return a.t < b.t;
            });

  // consistency sweep: between consecutive events the count must be constant
  for (int i = 0; i <= steps; ++i) {
    double t = t_lo + (t_hi - t_lo) * i / steps;
    if (t <= 0.0) continue;
    bool near_event = false;
    int expected = -1;
    for (const ThresholdEvent& e : scan.events) {
      if (std::abs(t - e.t) < 1e-5 * e.t) near_event = true;
      if (e.t < t) expected = e.count_after;
      if (e.t > t && expected < 0) expected = e.count_before;
    }
    if (near_event || expected < 0) continue;
    if (root_count(m, n, t) != expected)
      throw internal_error("threshold_scan: count sweep contradicts events");
  }
  return scan;
}

}  // namespace mahlervol
