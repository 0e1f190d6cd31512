#include "mahlervol/dilog.hpp"

#include <cmath>
#include <numbers>

#include "mahlervol/common.hpp"

namespace mahlervol {
namespace {

constexpr double pi = std::numbers::pi;
constexpr int kTerms = 48;

// Coefficient tables for the two Clausen series branches. zeta(2j) comes from
// the recurrence (2n + 1) zeta(2n) = 2 sum_{k<n} zeta(2k) zeta(2n - 2k),
// seeded with zeta(2) = pi^2/6; the values decay to 1 and the recurrence only
// adds positive terms, so the table is accurate to the last bit.
struct ClausenTables {
  double inner[kTerms + 1] = {};   // zeta(2j) / (j (2j+1))
  double outer[kTerms + 1] = {};   // zeta(2j) (1 - 4^{-j}) / (j (2j+1))
  ClausenTables() {
    double zeta[kTerms + 1];
    zeta[1] = pi * pi / 6.0;
    for (int n = 2; n <= kTerms; ++n) {
      double s = 0.0;
      for (int k = 1; k < n; ++k) s += zeta[k] * zeta[n - k];
      zeta[n] = 2.0 * s / (2.0 * n + 1.0);
    }
    double pow4 = 1.0;
    for (int j = 1; j <= kTerms; ++j) {
      pow4 *= 0.25;
      inner[j] = zeta[j] / (j * (2.0 * j + 1.0));
      outer[j] = inner[j] * (1.0 - pow4);
    }
  }
};

const ClausenTables& tables() {
  static const ClausenTables t;
  return t;
}

// Cl2(x) = sum_{j>=1} sin(j x)/j^2 = -int_0^x log|2 sin(u/2)| du, by two
// series with the log singularity handled in closed form:
//   |x| <= pi/2:       Cl2(x) = x - x log|x| + x sum_j inner_j q^j,
//                      q = (x / 2 pi)^2
//   pi/2 < |x| <= pi:  Cl2(pi - y) = y log 2 - y sum_j outer_j r^j,
//                      r = (y / pi)^2
// Both expansions follow from integrating the product formulas for sin and
// cos termwise; the worst-case term ratio is 1/4, so kTerms is generous.
double clausen(double x) {
  x = std::remainder(x, 2.0 * pi);
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    sign = -1.0;
  }
  if (x == 0.0 || x == pi) return 0.0;
  const ClausenTables& tab = tables();
  double result;
  if (x <= 0.5 * pi) {
    double q = x / (2.0 * pi);
    q *= q;
    double qp = 1.0, s = 0.0;
    for (int j = 1; j <= kTerms; ++j) {
      qp *= q;
      double term = tab.inner[j] * qp;
      s += term;
      if (term < 1e-18 * (1.0 + s)) break;
    }
    result = x - x * std::log(x) + x * s;
  } else {
    double y = pi - x;
    double r = y / pi;
    r *= r;
    double rp = 1.0, s = 0.0;
    for (int j = 1; j <= kTerms; ++j) {
      rp *= r;
      double term = tab.outer[j] * rp;
      s += term;
      if (term < 1e-18 * (1.0 + s)) break;
    }
    result = y * std::numbers::ln2 - y * s;
  }
  return sign * result;
}

// Defining formula through the Li2 power series; requires |z| <= 1/2 and
// works on either side of the real axis.
double series_disk(std::complex<double> z) {
  std::complex<double> term = z, acc = z;
  for (int k = 2; k <= 64; ++k) {
    term *= z;
    acc += term / double(k * k);
    if (std::norm(term) < 1e-36) break;
  }
  return acc.imag() + std::log(std::abs(z)) * std::arg(1.0 - z);
}

// Im z > 0 here. Reduce into the series disk where one step suffices;
// otherwise split the ideal tetrahedron with cross ratio z into three
// circle angles: D(z) = [Cl2(2 a1) + Cl2(2 a2) + Cl2(2 a3)] / 2 with
// a1 = arg z, a3 = -arg(1 - z), a2 = pi - a1 - a3.
double upper_half(std::complex<double> z) {
  double r2 = std::norm(z);
  if (r2 <= 0.25) return series_disk(z);
  if (std::norm(1.0 - z) <= 0.25) return -series_disk(1.0 - z);
  if (r2 >= 4.0) return -series_disk(1.0 / z);
  double a1 = std::arg(z);
  double a3 = -std::arg(1.0 - z);
  double a2 = pi - a1 - a3;
  return 0.5 * (clausen(2.0 * a1) + clausen(2.0 * a2) + clausen(2.0 * a3));
}

}  // namespace

double bloch_wigner(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw domain_error("bloch_wigner: non-finite argument");
  if (z.imag() == 0.0) return 0.0;
  return z.imag() > 0.0 ? upper_half(z) : -upper_half(std::conj(z));
}

double clausen_volume(double theta) {
  if (!std::isfinite(theta))
    throw domain_error("clausen_volume: non-finite angle");
  return clausen(theta);
}

double orthoscheme_volume(double omega) {
  if (!(omega > 0.0) || !(omega <= pi))
    throw domain_error("orthoscheme_volume: apex angle must lie in (0, pi]");
  return 0.5 * clausen(omega);
}

}  // namespace mahlervol
