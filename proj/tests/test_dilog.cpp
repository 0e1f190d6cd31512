#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "mahlervol/common.hpp"
#include "mahlervol/dilog.hpp"
#include "oracles.hpp"

using mahlervol::bloch_wigner;
using mahlervol::clausen_volume;
using mahlervol::orthoscheme_volume;
using std::complex;
constexpr double pi = oracles::pi;

// Reference values computed to 25+ digits with the defining series/integral.
constexpr double kCatalan = 0.9159655941772190150546035;
constexpr double kCl2PiOver3 = 1.0149416064096536250212026;
constexpr double kCl2PiOver4 = 0.9818721510502033567179246;
constexpr double kCl2PiOver5 = 0.9237551681005353087119860;
constexpr double kCl2TwoPiOver3 = 0.6766277376064357500141350;
constexpr double kCl2TwoPiOver5 = 0.9973546913984147786672836;
constexpr double kCl2One = 1.0139591323607685042945740;
constexpr double kCl2TwoPointFive = 0.4335982032355327793647329;
constexpr double kCl2Three = 0.0980262093913014211614298;

TEST_CASE("the two oracles agree with each other and the frozen constants") {
  CHECK(std::abs(oracles::cl2_integral(pi / 2) - kCatalan) < 2e-14);
  CHECK(std::abs(oracles::cl2_series(pi / 2) - kCatalan) < 2e-14);
  CHECK(std::abs(oracles::cl2_integral(pi / 3) - kCl2PiOver3) < 2e-14);
  CHECK(std::abs(oracles::cl2_series(pi / 3) - kCl2PiOver3) < 2e-14);
  CHECK(std::abs(oracles::cl2_integral(2 * pi / 5) - kCl2TwoPiOver5) < 2e-14);
  for (int i = 1; i <= 40; ++i) {
    double theta = 0.05 + (pi - 0.1) * i / 41.0;
    CHECK(std::abs(oracles::cl2_integral(theta) - oracles::cl2_series(theta)) <
          2e-14);
  }
}

TEST_CASE("clausen_volume matches the frozen constants") {
  CHECK(std::abs(clausen_volume(pi / 2) - kCatalan) < 1e-14);
  CHECK(std::abs(clausen_volume(pi / 3) - kCl2PiOver3) < 1e-14);
  CHECK(std::abs(clausen_volume(pi / 4) - kCl2PiOver4) < 1e-14);
  CHECK(std::abs(clausen_volume(pi / 5) - kCl2PiOver5) < 1e-14);
  CHECK(std::abs(clausen_volume(2 * pi / 3) - kCl2TwoPiOver3) < 1e-14);
  CHECK(std::abs(clausen_volume(2 * pi / 5) - kCl2TwoPiOver5) < 1e-14);
  CHECK(std::abs(clausen_volume(1.0) - kCl2One) < 1e-14);
  CHECK(std::abs(clausen_volume(2.5) - kCl2TwoPointFive) < 1e-14);
  CHECK(std::abs(clausen_volume(3.0) - kCl2Three) < 1e-14);
}

TEST_CASE("clausen_volume tracks the integral oracle across (0, pi)") {
  for (int i = 1; i <= 300; ++i) {
    double theta = pi * i / 301.0;
    CHECK(std::abs(clausen_volume(theta) - oracles::cl2_integral(theta)) <
          1e-13);
  }
  // approach the endpoints where the series branches are at their edges
  for (double theta : {1e-3, 1e-6, 1e-9, pi - 1e-3, pi - 1e-6}) {
    CHECK(std::abs(clausen_volume(theta) - oracles::cl2_integral(theta)) <
          1e-13);
  }
}

TEST_CASE("clausen_volume symmetry, periodicity, duplication") {
  std::mt19937_64 rng(20260817);
  std::uniform_real_distribution<double> u(1e-3, pi - 1e-3);
  for (int i = 0; i < 400; ++i) {
    double theta = u(rng);
    CHECK(std::abs(clausen_volume(-theta) + clausen_volume(theta)) < 1e-15);
    CHECK(std::abs(clausen_volume(theta + 2 * pi) - clausen_volume(theta)) <
          1e-13);
    CHECK(std::abs(clausen_volume(theta - 2 * pi) - clausen_volume(theta)) <
          1e-13);
    // Cl2(2x) = 2 Cl2(x) - 2 Cl2(pi - x) crosses both series branches
    CHECK(std::abs(clausen_volume(2 * theta) - 2 * clausen_volume(theta) +
                   2 * clausen_volume(pi - theta)) < 1e-13);
  }
}

TEST_CASE("clausen_volume is exactly zero at multiples of pi") {
  CHECK(clausen_volume(0.0) == 0.0);
  CHECK(clausen_volume(pi) == 0.0);
  CHECK(clausen_volume(-pi) == 0.0);
  CHECK(clausen_volume(2 * pi) == 0.0);
  CHECK(clausen_volume(-2 * pi) == 0.0);
  CHECK(clausen_volume(4 * pi) == 0.0);
  // 3 pi rounds away from an exact double multiple, only near-zero is possible
  CHECK(std::abs(clausen_volume(3 * pi)) < 2e-15);
  CHECK(std::abs(clausen_volume(10 * pi)) < 1e-14);
}

TEST_CASE("bloch_wigner frozen values, one per evaluation branch") {
  // power series disk
  CHECK(std::abs(bloch_wigner({0.3, 0.4}) - 0.8212075572077376135892996) <
        1e-14);
  // reflection through 1 - z
  CHECK(std::abs(bloch_wigner({0.8, 0.3}) - 0.6959878635064620353907327) <
        1e-14);
  CHECK(std::abs(bloch_wigner({1.1, 0.2}) - 0.4593083313031351418393339) <
        1e-14);
  // inversion through 1/z
  CHECK(std::abs(bloch_wigner({2.0, 1.0}) - 0.5116663985538234959678961) <
        1e-14);
  // circle-angle decomposition region
  CHECK(std::abs(bloch_wigner({-0.5, 1.2}) - 0.7335350648198347788235469) <
        1e-14);
  CHECK(std::abs(bloch_wigner({0.95, 0.6}) - 0.8776129011994140886898219) <
        1e-14);
  // lower half plane via antisymmetry
  CHECK(std::abs(bloch_wigner({-3.0, -2.0}) + 0.2976568495031057535667157) <
        1e-14);
  CHECK(std::abs(bloch_wigner({0.9, -0.05}) + 0.1742606477609759636885030) <
        1e-14);
  // on the circle
  CHECK(std::abs(bloch_wigner({0.0, 1.0}) - kCatalan) < 1e-14);
  CHECK(std::abs(bloch_wigner(std::polar(1.0, pi / 3)) - kCl2PiOver3) < 1e-14);
}

TEST_CASE("bloch_wigner vanishes identically on the real axis") {
  for (double x : {-100.0, -5.0, -1.0, -0.3, 0.0, 0.25, 0.5, 1.0, 1.7, 2.0,
                   100.0}) {
    CHECK(bloch_wigner({x, 0.0}) == 0.0);
  }
}

TEST_CASE("bloch_wigner antisymmetry, bound, circle agreement") {
  std::mt19937_64 rng(987654321);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  const double dmax = 1.0149416064096536;
  for (int i = 0; i < 1000; ++i) {
    complex<double> z(box(rng), box(rng));
    double d = bloch_wigner(z);
    CHECK(std::abs(bloch_wigner(std::conj(z)) + d) < 1e-13);
    CHECK(std::abs(d) <= dmax + 1e-12);
  }
  std::uniform_real_distribution<double> ang(-2 * pi, 2 * pi);
  for (int i = 0; i < 1000; ++i) {
    double theta = ang(rng);
    CHECK(std::abs(clausen_volume(theta) - bloch_wigner(std::polar(1.0, theta))) <
          1e-13);
  }
}

TEST_CASE("bloch_wigner agrees with the series oracle on the lens region") {
  // points outside every reduction disk, so the angle decomposition runs,
  // but still inside the oracle's radius of convergence
  std::mt19937_64 rng(13579);
  std::uniform_real_distribution<double> rad(0.55, 0.85);
  std::uniform_real_distribution<double> ang(0.05, pi - 0.05);
  int tested = 0;
  while (tested < 200) {
    complex<double> z = std::polar(rad(rng), ang(rng));
    if (std::abs(1.0 - z) <= 0.55) continue;
    CHECK(std::abs(bloch_wigner(z) - oracles::bloch_wigner_series(z)) < 1e-13);
    ++tested;
  }
}

TEST_CASE("bloch_wigner is continuous across its branch seams") {
  for (int j = 0; j < 16; ++j) {
    double phi = 0.05 + (pi - 0.1) * j / 15.0;
    for (double r : {0.5, 2.0}) {
      complex<double> lo = std::polar(r * (1 - 1e-9), phi);
      complex<double> hi = std::polar(r * (1 + 1e-9), phi);
      CHECK(std::abs(bloch_wigner(lo) - bloch_wigner(hi)) < 1e-7);
    }
    complex<double> s = complex<double>(1.0, 0.0) + std::polar(0.5, phi);
    CHECK(std::abs(bloch_wigner(s * (1 - 1e-9)) - bloch_wigner(s * (1 + 1e-9))) <
          1e-7);
  }
}

TEST_CASE("bloch_wigner decays monotonically into the singular points") {
  for (complex<double> center : {complex<double>(0, 0), complex<double>(1, 0)}) {
    for (int j = 0; j < 8; ++j) {
      double phi = pi * j / 4.0 + 0.1;
      double prev = 1e9;
      for (int k = 8; k <= 14; ++k) {
        double r = std::pow(10.0, -k);
        double v = std::abs(bloch_wigner(center + std::polar(r, phi)));
        CHECK(v < prev);
        prev = v;
      }
      CHECK(prev < 5e-12);
    }
  }
}

TEST_CASE("orthoscheme_volume values and domain") {
  CHECK(std::abs(orthoscheme_volume(pi / 2) - 0.4579827970886095075273018) <
        1e-14);
  CHECK(std::abs(orthoscheme_volume(2 * pi / 5) - 0.4986773456992073893336418) <
        1e-14);
  CHECK(orthoscheme_volume(pi) == 0.0);
  CHECK(std::abs(2 * orthoscheme_volume(1.3) - clausen_volume(1.3)) < 1e-15);
  CHECK_THROWS_AS(orthoscheme_volume(0.0), mahlervol::domain_error);
  CHECK_THROWS_AS(orthoscheme_volume(-0.5), mahlervol::domain_error);
  CHECK_THROWS_AS(orthoscheme_volume(pi + 1e-9), mahlervol::domain_error);
  CHECK_THROWS_AS(orthoscheme_volume(std::nan("")), mahlervol::domain_error);
}

TEST_CASE("bloch_wigner rejects non-finite input") {
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(bloch_wigner({inf, 0.0}), mahlervol::domain_error);
  CHECK_THROWS_AS(bloch_wigner({0.0, std::nan("")}), mahlervol::domain_error);
}
