#pragma once

#include <complex>
#include <vector>

#include "mahlervol/spectrum.hpp"

namespace mahlervol {

// Interval indices of sigma in the half-open case grids
// (k pi/m, (k+1) pi/m] and (l pi/n, (l+1) pi/n].
struct CaseIndices {
  int k = 0;
  int l = 0;
};

// Cyclic polygon with n chords of central angle eta (unit length) followed by
// m chords of central angle tau (length t), all inscribed in a circle of the
// stated radius. The traversal starts at radius * e^{i0}, turns by +eta for
// each unit chord, then by +tau or -tau for each t chord, and closes after
// winding_h full turns: n eta + s m tau = 2 pi winding_h with s = +1 exactly
// when same_direction. winding_h may be negative when the t chords dominate an
// opposite-winding traversal.
struct AdmissiblePolygon {
  FamilyParams params;
  double source_sigma = 0.0;             // angle of the unit root it came from
  CaseIndices cases;
  double eta = 0.0;                      // in (0, pi]
  double tau = 0.0;                      // in (0, pi]
  int winding_h = 0;
  bool same_direction = false;
  double radius = 0.0;                   // 1 / (2 sin(eta / 2))
  std::vector<std::complex<double>> vertices;  // m + n + 1 points, last = first
};

// Builds the polygon attached to a unit root: eta and tau are the central
// angles of alpha^m and alpha^n folded into (0, pi], the case indices record
// the folding, and the closure relation fixes winding_h. Angles landing within
// 5e-12 of a case boundary snap to the boundary (degenerate chord, angle pi).
AdmissiblePolygon alpha_to_polygon(const FamilyParams& p, const UnitRoot& root);

// Vertex list of the closed traversal described above; first entry is
// radius * e^{i0}, last entry repeats the first up to closure error <= 1e-10.
std::vector<std::complex<double>> polygon_vertices(const AdmissiblePolygon& poly);

// Hyperbolic volume of the ideal polyhedron over the polygon:
// [n Cl2(eta) + s m Cl2(tau)] / 2 with s = +1 exactly when same_direction.
double polygon_volume(const AdmissiblePolygon& poly);

// Inverse of alpha_to_polygon: recovers sigma from (eta, tau, winding_h,
// same_direction) alone by solving the closure congruence, then verifies the
// rebuilt polygon matches. Mismatch or an unsolvable congruence raises
// domain_error (malformed polygon).
double polygon_to_alpha(const AdmissiblePolygon& poly);

struct SignedPolygon {
  AdmissiblePolygon polygon;
  int epsilon = 0;                       // +1 or -1
};

// One polygon per unit root, with the orientation sign epsilon_j determined by
// whether the root opens or closes a positive arc and by the parity of its
// eta case index.
std::vector<SignedPolygon> enumerate_polygons(const FamilyParams& p);

struct TheoremCheck {
  double lhs = 0.0;            // pi * (dilog part of the closed-form measure)
  double rhs = 0.0;            // (2 / (m n)) * sum_j epsilon_j Vol_j
  double residual = 0.0;       // |lhs - rhs|
  int polygon_count = 0;
  bool tangency_warning = false;
};

// Evaluates both sides of the volume identity for one family member.
TheoremCheck verify_main_theorem(const FamilyParams& p);

}  // namespace mahlervol
