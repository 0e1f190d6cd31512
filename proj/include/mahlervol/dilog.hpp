#pragma once

#include <complex>

namespace mahlervol {

// Bloch-Wigner dilogarithm D(z) = Im Li2(z) + log|z| arg(1 - z).
// Real-analytic off {0, 1}, continuous everywhere, and identically zero on the
// real axis (returned as exact 0.0). Satisfies D(conj z) = -D(z) and
// |D(z)| <= D(e^{i pi/3}) ~ 1.0149416064096536.
double bloch_wigner(std::complex<double> z);

// D restricted to the unit circle as a function of the angle: the Clausen
// function Cl2(theta) = sum_{j>=1} sin(j theta)/j^2. Odd, 2 pi periodic,
// exact 0.0 at multiples of pi.
double clausen_volume(double theta);

// Hyperbolic volume of the pair of ideal tetrahedra lying over an isosceles
// triangle inscribed in a circle with apex angle omega, equal to
// Cl2(omega)/2. Domain (0, pi]; omega = pi (degenerate diameter chord) gives 0.
double orthoscheme_volume(double omega);

}  // namespace mahlervol
