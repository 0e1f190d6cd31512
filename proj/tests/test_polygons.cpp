#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "mahlervol/common.hpp"
#include "mahlervol/dilog.hpp"
#include "mahlervol/polygons.hpp"

using namespace mahlervol;

namespace {

constexpr double pi = std::numbers::pi;

// volume of one polygon predicted from the root angle alone; the eta case
// parity carries the sign of the Clausen fold
double predicted_volume(const AdmissiblePolygon& q) {
  int m = q.params.m, n = q.params.n;
  double dm = bloch_wigner(std::polar(1.0, m * q.source_sigma));
  double dn = bloch_wigner(std::polar(1.0, n * q.source_sigma));
  double sign = q.cases.k % 2 == 0 ? 1.0 : -1.0;
  return sign * (n * dm - m * dn) / 2.0;
}

}  // namespace

TEST_CASE("case table of the (2,3) member across its three regimes") {
  // t = 0.5: opposite winding first, then same
  {
    auto polys = enumerate_polygons(make_family(2, 3, 0.5));
    REQUIRE(polys.size() == 2);
    CHECK(polys[0].polygon.cases.k == 1);
    CHECK(polys[0].polygon.cases.l == 1);
    CHECK(!polys[0].polygon.same_direction);
    CHECK(polys[0].polygon.winding_h == 1);
    CHECK(polys[0].epsilon == -1);
    CHECK(polys[1].polygon.cases.k == 1);
    CHECK(polys[1].polygon.cases.l == 2);
    CHECK(polys[1].polygon.same_direction);
    CHECK(polys[1].polygon.winding_h == 1);
    CHECK(polys[1].epsilon == 1);
  }
  // t = 1: the first root gives the 3 eta + 2 tau = 4 pi relation
  {
    auto polys = enumerate_polygons(make_family(2, 3, 1.0));
    REQUIRE(polys.size() == 2);
    const AdmissiblePolygon& q = polys[0].polygon;
    CHECK(q.cases.k == 0);
    CHECK(q.cases.l == 1);
    CHECK(q.same_direction);
    CHECK(q.winding_h == 2);
    CHECK(std::abs(q.eta - 4 * pi / 5) < 1e-12);
    CHECK(std::abs(q.tau - 4 * pi / 5) < 1e-12);
    CHECK(std::abs(3 * q.eta + 2 * q.tau - 4 * pi) < 1e-12);
    CHECK(polys[1].polygon.cases.k == 1);
    CHECK(polys[1].polygon.cases.l == 2);
    CHECK(polys[1].polygon.same_direction);
    CHECK(polys[1].polygon.winding_h == 1);
  }
  // t = 1.3: a winding-free polygon appears
  {
    auto polys = enumerate_polygons(make_family(2, 3, 1.3));
    REQUIRE(polys.size() == 2);
    const AdmissiblePolygon& a = polys[0].polygon;
    CHECK(a.cases.k == 0);
    CHECK(a.cases.l == 0);
    CHECK(!a.same_direction);
    CHECK(a.winding_h == 0);
    double s1 = a.source_sigma;
    CHECK(std::abs(a.eta - 2 * s1) < 1e-12);
    CHECK(std::abs(a.tau - (pi - (3 * s1 - pi))) > 0.0);  // folded once
    const AdmissiblePolygon& b = polys[1].polygon;
    double s2 = b.source_sigma;
    CHECK(std::abs(b.eta - (2 * pi - 2 * s2)) < 1e-12);
    CHECK(std::abs(b.tau - (3 * s2 - 2 * pi)) < 1e-12);
    CHECK(b.winding_h == 1);
    CHECK(b.same_direction);
  }
}

TEST_CASE("the t = 1 (1,4) member: pentagon, triangle, pentagram") {
  auto polys = enumerate_polygons(make_family(1, 4, 1.0));
  REQUIRE(polys.size() == 3);

  const AdmissiblePolygon& pent = polys[0].polygon;
  CHECK(std::abs(pent.eta - 2 * pi / 5) < 1e-12);
  CHECK(std::abs(pent.tau - 2 * pi / 5) < 1e-12);
  CHECK(pent.winding_h == 1);
  CHECK(pent.same_direction);
  CHECK(std::abs(pent.radius - 0.8506508083520399321815405) < 1e-15);
  CHECK(polys[0].epsilon == 1);

  const AdmissiblePolygon& tri = polys[1].polygon;
  CHECK(std::abs(tri.eta - 2 * pi / 3) < 1e-12);
  CHECK(std::abs(tri.tau - 2 * pi / 3) < 1e-12);
  CHECK(tri.winding_h == 1);
  CHECK(!tri.same_direction);
  CHECK(polys[1].epsilon == -1);

  const AdmissiblePolygon& star = polys[2].polygon;
  CHECK(std::abs(star.eta - 4 * pi / 5) < 1e-12);
  CHECK(std::abs(star.tau - 4 * pi / 5) < 1e-12);
  CHECK(star.winding_h == 2);
  CHECK(star.same_direction);
  CHECK(polys[2].epsilon == 1);

  // unit chords of the regular pentagon really have unit length
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(std::abs(pent.vertices[i + 1] - pent.vertices[i]) - 1.0) <
          1e-12);
}

TEST_CASE("negative winding appears when the t chords dominate") {
  auto polys = enumerate_polygons(make_family(4, 1, 2.2));
  REQUIRE(polys.size() == 3);
  CHECK(polys[0].polygon.winding_h == 1);
  CHECK(polys[1].polygon.winding_h == -1);
  CHECK(!polys[1].polygon.same_direction);
  CHECK(polys[2].polygon.winding_h == 2);
  CHECK(polygon_volume(polys[1].polygon) < 0.0);
}

TEST_CASE("polygon geometry invariants across a parameter grid") {
  int families[][2] = {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {2, 5}, {3, 2},
                       {5, 2}, {4, 1}, {4, 5}};
  for (auto& f : families) {
    for (double t : {0.6, 1.0, 1.7, 2.4}) {
      FamilyParams p = make_family(f[0], f[1], t);
      auto polys = enumerate_polygons(p);
      auto scan = find_unit_roots(p);
      REQUIRE(polys.size() == scan.roots.size());
      for (size_t i = 0; i < polys.size(); ++i) {
        const AdmissiblePolygon& q = polys[i].polygon;
        CHECK(q.source_sigma == scan.roots[i].sigma);
        CHECK((polys[i].epsilon == 1 || polys[i].epsilon == -1));
        CHECK(q.eta > 0.0);
        CHECK(q.eta <= pi);
        CHECK(q.tau > 0.0);
        CHECK(q.tau <= pi);
        CHECK(std::abs(q.radius - 0.5 / std::sin(q.eta / 2)) <
              1e-15 * q.radius);
        // chord lengths: unit for the eta steps, t for the tau steps
        CHECK(std::abs(2 * q.radius * std::sin(q.eta / 2) - 1.0) < 1e-12);
        CHECK(std::abs(2 * q.radius * std::sin(q.tau / 2) - t) <
              1e-12 * std::max(1.0, t));
        // closure relation n eta + s m tau = 2 pi h
        double s = q.same_direction ? 1.0 : -1.0;
        CHECK(std::abs(q.params.n * q.eta + s * q.params.m * q.tau -
                       2 * pi * q.winding_h) < 1e-9);
        // vertex ring: closed, inscribed, correct chord lengths
        REQUIRE(int(q.vertices.size()) == q.params.m + q.params.n + 1);
        CHECK(std::abs(q.vertices.front() - q.vertices.back()) <= 1e-10);
        for (const auto& v : q.vertices)
          CHECK(std::abs(std::abs(v) - q.radius) < 1e-12 * q.radius);
        for (int j = 0; j < q.params.n; ++j)
          CHECK(std::abs(std::abs(q.vertices[j + 1] - q.vertices[j]) - 1.0) <
                1e-9);
        for (int j = q.params.n; j < q.params.n + q.params.m; ++j)
          CHECK(std::abs(std::abs(q.vertices[j + 1] - q.vertices[j]) - t) <
                1e-9);
        // volume against the dilogarithm of the root powers
        CHECK(std::abs(polygon_volume(q) - predicted_volume(q)) < 1e-12);
        // the construction inverts
        CHECK(std::abs(polygon_to_alpha(q) - q.source_sigma) < 1e-12);
      }
    }
  }
}

TEST_CASE("a degenerate diameter chord at the shape transition") {
  double t = std::sqrt(4.0 + 2.0 * std::sqrt(2.0));
  auto polys = enumerate_polygons(make_family(1, 4, t));
  REQUIRE(polys.size() == 1);
  const AdmissiblePolygon& q = polys[0].polygon;
  CHECK(std::abs(q.source_sigma - pi / 4) < 1e-12);
  CHECK(q.tau == pi);
  CHECK(q.winding_h == 0);
  CHECK(!q.same_direction);
  CHECK(std::abs(2 * q.radius - t) < 1e-12);  // the t chord is a diameter
  CHECK(std::abs(polygon_volume(q) - 2 * clausen_volume(pi / 4)) < 1e-12);
  CHECK(std::abs(polygon_to_alpha(q) - q.source_sigma) < 1e-12);
}

TEST_CASE("volume rejects angles outside (0, pi]") {
  auto polys = enumerate_polygons(make_family(2, 3, 1.0));
  AdmissiblePolygon bad = polys[0].polygon;
  bad.eta = -0.1;
  CHECK_THROWS_AS(polygon_volume(bad), domain_error);
  bad = polys[0].polygon;
  bad.tau = pi + 1e-6;
  CHECK_THROWS_AS(polygon_volume(bad), domain_error);
}

TEST_CASE("tampered polygons fail the inverse construction") {
  auto polys = enumerate_polygons(make_family(2, 3, 1.0));
  AdmissiblePolygon q = polys[0].polygon;
  q.tau += 0.1;
  CHECK_THROWS_AS(polygon_to_alpha(q), domain_error);
  q = polys[0].polygon;
  q.winding_h += 1;
  CHECK_THROWS_AS(polygon_to_alpha(q), domain_error);
}

TEST_CASE("polygons form only over genuine unit roots") {
  FamilyParams p = make_family(2, 3, 1.0);
  UnitRoot fake;
  fake.sigma = 0.5;
  fake.alpha = std::polar(1.0, 0.5);
  fake.index = 1;
  CHECK_THROWS_AS(alpha_to_polygon(p, fake), domain_error);
}

TEST_CASE("the volume identity holds across the parameter grid") {
  int families[][2] = {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {2, 5}, {3, 2},
                       {5, 2}, {4, 1}, {4, 5}};
  for (auto& f : families) {
    for (double t : {0.6, 1.0, 1.7, 2.4}) {
      TheoremCheck chk = verify_main_theorem(make_family(f[0], f[1], t));
      CHECK(chk.residual <= 1e-10);
      CHECK(chk.polygon_count >= 0);
    }
  }
}

TEST_CASE("the volume identity for an empty spectrum is 0 = 0") {
  TheoremCheck chk = verify_main_theorem(make_family(1, 4, 4.5));
  CHECK(chk.lhs == 0.0);
  CHECK(chk.rhs == 0.0);
  CHECK(chk.polygon_count == 0);
  CHECK(!chk.tangency_warning);
}

TEST_CASE("the volume identity flags tangent configurations") {
  TheoremCheck chk = verify_main_theorem(make_family(2, 3, 1.5));
  CHECK(chk.tangency_warning);
  CHECK(chk.residual <= 1e-10);
}
