#pragma once

#include <vector>

#include "equivol/error.hpp"

namespace equivol {

// Lobachevsky function L(theta) = -Integral_0^theta log|2 sin t| dt.
// Odd, pi-periodic; both hold exactly here because the argument is range
// reduced with ieee remainder() before the series is evaluated.
// Absolute error < 1e-13 on the reduced interval.
double lobachevsky(double theta);

// Volume of the regular ideal octahedron, 8 L(pi/4).  Cached.
double constant_V8();
// Volume of the regular ideal tetrahedron, 2 L(pi/6).  Cached.
double constant_V3();
// Catalan's constant summed directly to < 1e-13; constant_V8() == 4K.
double catalan_constant();

// Sum of L(angle_i): volume of the cone from a ball center over an ideal
// polygon with consecutive normal angles angle_i.  Each angle must lie in
// [0, pi/2] (AngleOutOfRange).
double cone_on_ideal_polygon(const std::vector<double>& angles);

// L(pi/2 - alpha)/2: tetrahedron with two ideal and two right-angled finite
// vertices, dihedral angle alpha along the finite edge.  alpha in [0, pi/2].
double two_ideal_vertex_tet_volume(double alpha);

// Orthoscheme T(alpha, beta, gamma), alpha/beta/gamma in (0, pi/2):
//   (1/4) (L(a+d) - L(a-d) + L(g+d) - L(g-d)
//          - L(pi/2-b+d) + L(pi/2-b-d) + 2 L(pi/2-d)),
//   d = arctan(sqrt(-D)/(cos a cos g)), D = sin^2 a sin^2 g - cos^2 b.
// D > 0 is not a hyperbolic orthoscheme (NotAnOrthoscheme).
double orthoscheme_volume(double alpha, double beta, double gamma);

// Orthoscheme with one ideal vertex, T(alpha, pi/2 - alpha, gamma):
//   (1/4) (L(alpha+gamma) + L(alpha-gamma) + 2 L(pi/2-alpha)).
double ideal_orthoscheme_volume(double alpha, double gamma);

// Largest possible value of (1/2) sum_i L(pi/2 - a_i) over m angles a_i >= 0
// with sum c: attained at a_i = c/m, giving (m/2) L(pi/2 - c/m).
// Requires m >= 1 and c in [0, m pi/2] (ConstraintOutOfRange).
double vertex_volume_cap(int m, double c);

// Volume formulas clamp results in (-1e-12, 0) to 0; each clamp bumps this
// counter.  Anything more negative escapes as NegativeArea.
long volume_clamp_count();

}  // namespace equivol
