#include "mahlervol/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "mahlervol/common.hpp"

namespace mahlervol {
namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1], positive half; the Gauss
// weights pair with every other Kronrod node.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct PanelEstimate {
  double kronrod;
  double err;
};

PanelEstimate eval_panel(const std::function<double(double)>& f, double a,
                         double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double x = h * kXgk[i];
    double fsum = f(c - x) + f(c + x);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  return {resk * h, std::abs(resk - resg) * h};
}

// Neumaier compensated accumulator; deterministic given a fixed add order.
struct CompensatedSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double get() const { return s + c; }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& breakpoints,
                                    double abs_tol, long long max_panels) {
  if (breakpoints.size() < 2)
    throw domain_error("integrate_adaptive: need at least two breakpoints");
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i]) || !(breakpoints[i] < breakpoints[i + 1]))
      throw domain_error(
          "integrate_adaptive: breakpoints must be finite and increasing");
  }
  if (!(abs_tol > 0.0))
    throw domain_error("integrate_adaptive: tolerance must be positive");

  struct Panel {
    double err, a, b, kronrod;
  };
  // Worst bound first; ties broken by position so the pop order never
  // depends on heap internals.
  auto milder = [](const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(milder)> heap(milder);

  CompensatedSum value, errsum;
  long long frozen = 0;        // panels at the width floor, kept as they are
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    PanelEstimate e = eval_panel(f, breakpoints[i], breakpoints[i + 1]);
    value.add(e.kronrod);
    errsum.add(e.err);
    heap.push({e.err, breakpoints[i], breakpoints[i + 1], e.kronrod});
  }

  bool budget_hit = false;
  while (errsum.get() > abs_tol && !heap.empty()) {
    if ((long long)heap.size() + frozen >= max_panels) {
      budget_hit = true;
      break;
    }
    Panel p = heap.top();
    heap.pop();
    if (p.b - p.a < 1e-15 * (1.0 + std::abs(p.a))) {
      ++frozen;                // too narrow to split; its estimate stands
      continue;
    }
    double mid = 0.5 * (p.a + p.b);
    PanelEstimate left = eval_panel(f, p.a, mid);
    PanelEstimate right = eval_panel(f, mid, p.b);
    value.add(left.kronrod);
    value.add(right.kronrod);
    value.add(-p.kronrod);
    errsum.add(left.err);
    errsum.add(right.err);
    errsum.add(-p.err);
    heap.push({left.err, p.a, mid, left.kronrod});
    heap.push({right.err, mid, p.b, right.kronrod});
  }

  QuadratureResult r{value.get(), errsum.get(),
                     (long long)heap.size() + frozen};
  if (budget_hit && r.error_bound > abs_tol)
    throw accuracy_error("integrate_adaptive: panel budget exhausted", r.value,
                         r.error_bound);
  return r;
}

}  // namespace mahlervol
