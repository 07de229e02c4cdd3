#pragma once

#include <string>
#include <vector>

#include "equivol/andreev.hpp"
#include "equivol/polyhedron.hpp"

namespace equivol {

// One candidate inequality considered while assembling an interval.  side is
// "lower" or "upper"; strict means the inequality excludes its endpoint.
struct BoundTerm {
  std::string tag;
  std::string side;
  double value = 0.0;
  bool strict = false;
};

// Two-sided volume estimate.  The winning lower term is the largest lower
// candidate (strict wins ties, being the stronger claim); lower values are
// clamped at zero.  terms keeps every candidate for reporting.
struct BoundInterval {
  double lower = 0.0;
  bool lower_strict = false;
  double upper = 0.0;
  bool upper_strict = false;
  std::vector<BoundTerm> terms;
};

// 2 pi (n - w) for a polyhedron with n ideal vertices of which the white
// face class covers area w-fold; NegativeArea unless n >= w >= 0.
double white_area(int n, int w);

// pi (8 n_ideal + 3 n_finite - 4 f) / 2; NegativeArea when the combination
// is negative.
double boundary_area(int n_ideal, int n_finite, int f);

// area * V_8 / (4 pi): volume forced by a totally geodesic boundary of the
// given area.
double miyamoto_lower(double area);

// All-ideal right-angled case.  Requires check_pi2 to pass with no finite
// vertices (NotRealizable / HasFiniteVertices otherwise).  Lower candidates:
// white_face_area (n - |W|) V_8 / 2, black_face_area (|W| - 2) V_8 / 2,
// color_average (n - 2) V_8 / 4.  Upper: ideal_vertex_cones (n - 4) V_8 / 2.
BoundInterval bounds_ideal_pi2(const AbstractPolyhedron& p);

// Compact right-angled case (HasIdealVertices if any vertex is 4-valent).
// Lower: boundary_area (n - 8) V_8 / 32.  Upper, strict:
// finite_vertex_cells (n - 10) 5 V_3 / 8.
BoundInterval bounds_compact_pi2(const AbstractPolyhedron& p);

// Right-angled case with both vertex classes present (WrongDispatch when one
// class is empty).  Lower: boundary_area (4 n_ideal + n_finite - 8) V_8 / 32.
// Upper, strict: mixed_vertex_cells (n_ideal - 1) V_8 / 2 + n_finite 5 V_3 / 8.
BoundInterval bounds_mixed_pi2(const AbstractPolyhedron& p);

// Equiangular pi/3 case.  n = 4 is the regular ideal tetrahedron, an exact
// point interval [V_3, V_3].  For n > 4 the lower candidates are
// horoball_packing n V_3 / 3 (strict), independent_set |I| V_3 for an exact
// maximum independent set when n <= 64, and independence_ratio
// ceil(3 n / 8) V_3.  Upper: edge_cones (3 n - 14) V_3 / 2.
BoundInterval bounds_ideal_pi3(const AbstractPolyhedron& p);

// Runs the realizability check for p.label() and dispatches on the vertex
// classes (pi2 splits into ideal / compact / mixed).  NotRealizable when the
// check fails, UnknownKind when the label names no angle kind.
BoundInterval bounds(const AbstractPolyhedron& p);

// Largest vertex count any realizable polyhedron of the given kind can have
// subject to volume <= v.  kind is one of "ideal_pi2", "compact_pi2",
// "ideal_pi3" (UnknownKind otherwise); BadInput when v < 0.  Ratios within
// 1e-5 relative tolerance of an integer snap to it first, so values quoted
// to a few decimals invert exactly.
int max_vertices_for_volume(double v, const std::string& kind);

std::string bound_interval_to_json(const BoundInterval& b);

}  // namespace equivol
