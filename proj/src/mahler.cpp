#include "mahlervol/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahlervol/dilog.hpp"
#include "mahlervol/quadrature.hpp"

namespace mahlervol {
namespace {

constexpr double pi = std::numbers::pi;

// Antiderivative of the arc integrand: d/dtheta Psi = log|2 sin(n theta/2)|
// - log|2 sin(m theta/2)|, fixed by Psi(0) = 0.
double antiderivative(const FamilyParams& p, double theta) {
  return clausen_volume(p.m * theta) / p.m - clausen_volume(p.n * theta) / p.n;
}

}  // namespace

ArcDecomposition arc_decomposition(const FamilyParams& p,
                                   const RootScan& scan) {
  make_family(p.m, p.n, p.t);
  std::vector<double> cuts{0.0};
  for (const UnitRoot& r : scan.roots) {
    if (!(r.sigma > 0.0 && r.sigma < pi))
      throw domain_error("arc_decomposition: root outside (0, pi)");
    cuts.push_back(r.sigma);
  }
  cuts.push_back(pi);
  if (!std::is_sorted(cuts.begin(), cuts.end()))
    throw domain_error("arc_decomposition: roots must ascend");

  ArcDecomposition out;
  int prev_sign = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    int sign = boundary_value(p, mid) > 0.0 ? 1 : -1;
    if (prev_sign != 0 && sign == prev_sign)
      throw internal_error(
          "arc_decomposition: sign fails to alternate across a root");
    prev_sign = sign;
    if (sign > 0) {
      Arc a;
      a.start = cuts[i];
      a.end = cuts[i + 1];
      a.start_kind = i == 0 ? EndpointKind::origin : EndpointKind::root;
      a.end_kind =
          i + 2 == cuts.size() ? EndpointKind::semicircle_end : EndpointKind::root;
      a.start_root_index = i == 0 ? 0 : int(i);
      a.end_root_index = i + 2 == cuts.size() ? 0 : int(i) + 1;
      out.arcs.push_back(a);
    }
  }
  return out;
}

MeasureReport closed_form_measure(const FamilyParams& p) {
  FamilyParams q = make_family(p.m, p.n, p.t);
  MeasureReport rep;
  rep.scan = find_unit_roots(q);
  rep.arcs = arc_decomposition(q, rep.scan);
  rep.tangency_warning = rep.scan.near_threshold;

  double dilog = 0.0, arclen = 0.0;
  for (const Arc& a : rep.arcs.arcs) {
    dilog += antiderivative(q, a.end) - antiderivative(q, a.start);
    arclen += a.end - a.start;
  }
  rep.log_term = std::log(q.t);
  rep.dilog_term = dilog / pi;
  rep.arg_term = -rep.log_term * arclen / pi;
  rep.total = rep.log_term + rep.dilog_term + rep.arg_term;
  return rep;
}

double quadrature_measure(const FamilyParams& p, const QuadratureOptions& opt) {
  FamilyParams q = make_family(p.m, p.n, p.t);
  if (!(opt.abs_tol >= 1e-12))
    throw domain_error("quadrature_measure: abs_tol below 1e-12");

  RootScan scan = find_unit_roots(q);
  std::vector<double> cuts{0.0, pi};
  for (const UnitRoot& r : scan.roots) cuts.push_back(r.sigma);
  // the integrand's positive log poles sit where sin(m theta / 2) vanishes
  for (int j = 1; 2.0 * j * pi / q.m < pi - 1e-12; ++j)
    cuts.push_back(2.0 * j * pi / q.m);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-13; }),
             cuts.end());

  auto integrand = [&q](double theta) {
    double sn = std::abs(2.0 * std::sin(0.5 * q.n * theta));
    double sm = std::abs(2.0 * q.t * std::sin(0.5 * q.m * theta));
    if (sn == 0.0) return 0.0;
    if (sm == 0.0) return 709.0;  // not reachable at quadrature nodes
    double v = std::log(sn) - std::log(sm);
    return v > 0.0 ? v : 0.0;
  };
  QuadratureResult r = integrate_adaptive(integrand, cuts, opt.abs_tol * pi,
                                          opt.max_panels);
  return std::log(q.t) + r.value / pi;
}

double cassaigne_maillot(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !std::isfinite(a + b + c))
    throw domain_error("cassaigne_maillot: sides must be positive reals");
  bool triangle = a < b + c && b < a + c && c < a + b;
  if (!triangle) return std::log(std::max({a, b, c}));
  auto angle = [](double opp, double s1, double s2) {
    double cosv = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
    return std::acos(std::clamp(cosv, -1.0, 1.0));
  };
  double alpha = angle(a, b, c);
  double beta = angle(b, a, c);
  double gamma = pi - alpha - beta;
  double d = bloch_wigner(std::polar(a / b, gamma));
  return (d + alpha * std::log(a) + beta * std::log(b) + gamma * std::log(c)) /
         pi;
}

}  // namespace mahlervol
