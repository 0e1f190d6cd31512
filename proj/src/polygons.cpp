#include "mahlervol/polygons.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahlervol/dilog.hpp"
#include "mahlervol/mahler.hpp"

namespace mahlervol {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kBoundarySnap = 5e-12;

// Index j of sigma in the half-open grid (j pi/count, (j+1) pi/count].
// A sigma within kBoundarySnap of a boundary belongs to the cell it closes.
int interval_index(int count, double sigma) {
  double x = sigma * count / pi;
  double jr = std::round(x);
  if (jr >= 1.0 && std::abs(sigma - jr * pi / count) < kBoundarySnap)
    return int(jr) - 1;
  return int(std::floor(x));
}

void check_family(const FamilyParams& p) { make_family(p.m, p.n, p.t); }

double root_tolerance(const FamilyParams& p) {
  return 1e-9 * (4.0 + 4.0 * p.t * p.t);
}

}  // namespace

AdmissiblePolygon alpha_to_polygon(const FamilyParams& p, const UnitRoot& root) {
  check_family(p);
  double sigma = root.sigma;
  if (!(sigma > 0.0 && sigma < pi))
    throw domain_error("alpha_to_polygon: sigma outside (0, pi)");
  if (std::abs(boundary_value(p, sigma)) > root_tolerance(p))
    throw domain_error("alpha_to_polygon: sigma is not a unit root");

  AdmissiblePolygon poly;
  poly.params = p;
  poly.source_sigma = sigma;
  int k = interval_index(p.m, sigma);
  int l = interval_index(p.n, sigma);
  poly.cases = {k, l};

  // fold the chord angles m sigma and n sigma into (0, pi]
  double eta = (k % 2 == 0) ? p.m * sigma - k * pi : (k + 1) * pi - p.m * sigma;
  double tau = (l % 2 == 0) ? p.n * sigma - l * pi : (l + 1) * pi - p.n * sigma;
  eta = std::min(eta, pi);
  tau = std::min(tau, pi);
  if (!(eta > 0.0) || !(tau > 0.0))
    throw internal_error("alpha_to_polygon: degenerate zero chord angle");
  poly.eta = eta;
  poly.tau = tau;

  // opposite fold parities wind the two chord families the same way
  poly.same_direction = (k % 2) != (l % 2);

  // closure winding from the fold bookkeeping; always an even multiple of pi
  long long h2;
  if (k % 2 == 0 && l % 2 == 0)
    h2 = (long long)p.m * l - (long long)p.n * k;
  else if (k % 2 == 0)
    h2 = (long long)p.m * (l + 1) - (long long)p.n * k;
  else if (l % 2 == 0)
    h2 = (long long)p.n * (k + 1) - (long long)p.m * l;
  else
    h2 = (long long)p.n * (k + 1) - (long long)p.m * (l + 1);
  if (h2 % 2 != 0)
    throw internal_error("alpha_to_polygon: odd winding numerator");
  poly.winding_h = int(h2 / 2);

  double s = poly.same_direction ? 1.0 : -1.0;
  double resid =
      p.n * eta + s * p.m * tau - 2.0 * pi * double(poly.winding_h);
  if (std::abs(resid) > 1e-9)
    throw internal_error("alpha_to_polygon: closure relation violated");

  poly.radius = 1.0 / (2.0 * std::sin(0.5 * eta));
  poly.vertices = polygon_vertices(poly);
  return poly;
}

std::vector<std::complex<double>> polygon_vertices(
    const AdmissiblePolygon& poly) {
  const FamilyParams& p = poly.params;
  check_family(p);
  std::vector<std::complex<double>> v;
  v.reserve(p.m + p.n + 1);
  double angle = 0.0;
  double step_t = poly.same_direction ? poly.tau : -poly.tau;
  v.push_back(std::polar(poly.radius, 0.0));
  for (int i = 0; i < p.n; ++i) {
    angle += poly.eta;
    v.push_back(std::polar(poly.radius, angle));
  }
  for (int i = 0; i < p.m; ++i) {
    angle += step_t;
    v.push_back(std::polar(poly.radius, angle));
  }
  if (std::abs(v.back() - v.front()) > 1e-10)
    throw internal_error("polygon_vertices: traversal fails to close");
  return v;
}

double polygon_volume(const AdmissiblePolygon& poly) {
  const FamilyParams& p = poly.params;
  check_family(p);
  if (!(poly.eta > 0.0 && poly.eta <= pi) ||
      !(poly.tau > 0.0 && poly.tau <= pi))
    throw domain_error("polygon_volume: chord angles must lie in (0, pi]");
  double s = poly.same_direction ? 1.0 : -1.0;
  return 0.5 * (p.n * clausen_volume(poly.eta) +
                s * p.m * clausen_volume(poly.tau));
}

double polygon_to_alpha(const AdmissiblePolygon& poly) {
  const FamilyParams& p = poly.params;
  check_family(p);
  if (!(poly.eta > 0.0 && poly.eta <= pi + 1e-12) ||
      !(poly.tau > 0.0 && poly.tau <= pi + 1e-12))
    throw domain_error("polygon_to_alpha: chord angles must lie in (0, pi]");

  // Work with the smaller folded angle; rewriting the opposite-direction
  // relation with the roles swapped negates the winding number.
  double phi;
  int coef, mult;
  long long hh;
  if (poly.eta <= poly.tau) {
    phi = poly.eta;
    coef = p.n;
    mult = p.m;
    hh = poly.winding_h;
  } else {
    phi = poly.tau;
    coef = p.m;
    mult = p.n;
    hh = poly.same_direction ? poly.winding_h : -(long long)poly.winding_h;
  }

  // unique shift s with s coef = hh (mod mult) and 0 < phi - 2 pi s < 2 pi mult
  int shift = 1;
  bool found = false;
  for (int s = 0; s > -mult; --s) {
    long long r = ((long long)s * coef - hh) % mult;
    if ((r + mult) % mult == 0) {
      shift = s;
      found = true;
      break;
    }
  }
  if (!found)
    throw domain_error("polygon_to_alpha: closure congruence unsolvable");

  double v = phi - 2.0 * pi * shift;
  double sigma =
      v < mult * pi ? v / mult : ((shift + mult) * 2.0 * pi - phi) / mult;

  if (!(sigma > 0.0 && sigma < pi) ||
      std::abs(boundary_value(p, sigma)) > root_tolerance(p))
    throw domain_error("polygon_to_alpha: polygon matches no unit root");

  // round trip: the polygon rebuilt from sigma must reproduce the input
  UnitRoot u{sigma, std::polar(1.0, sigma), 0};
  AdmissiblePolygon back = alpha_to_polygon(p, u);
  if (std::abs(back.eta - poly.eta) > 1e-9 ||
      std::abs(back.tau - poly.tau) > 1e-9 ||
      back.winding_h != poly.winding_h ||
      back.same_direction != poly.same_direction)
    throw domain_error("polygon_to_alpha: polygon data is inconsistent");
  return sigma;
}

std::vector<SignedPolygon> enumerate_polygons(const FamilyParams& p) {
  FamilyParams q = make_family(p.m, p.n, p.t);
  RootScan scan = find_unit_roots(q);
  std::vector<SignedPolygon> out;
  double prev = 0.0;
  for (const UnitRoot& r : scan.roots) {
    SignedPolygon sp;
    sp.polygon = alpha_to_polygon(q, r);
    // the root closes a positive arc when F > 0 on its left
    double mid = 0.5 * (prev + r.sigma);
    int closes = boundary_value(q, mid) > 0.0 ? 1 : -1;
    int parity = sp.polygon.cases.k % 2 == 0 ? 1 : -1;
    sp.epsilon = closes * parity;
    out.push_back(sp);
    prev = r.sigma;
  }
  return out;
}

TheoremCheck verify_main_theorem(const FamilyParams& p) {
  FamilyParams q = make_family(p.m, p.n, p.t);
  MeasureReport rep = closed_form_measure(q);
  std::vector<SignedPolygon> polys = enumerate_polygons(q);
  TheoremCheck check;
  check.lhs = pi * rep.dilog_term;
  double acc = 0.0;
  for (const SignedPolygon& sp : polys)
    acc += sp.epsilon * polygon_volume(sp.polygon);
  check.rhs = 2.0 * acc / (double(q.m) * q.n);
  check.residual = std::abs(check.lhs - check.rhs);
  check.polygon_count = int(polys.size());
  check.tangency_warning = rep.tangency_warning;
  return check;
}

}  // namespace mahlervol
