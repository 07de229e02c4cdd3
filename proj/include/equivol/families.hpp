#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equivol/polyhedron.hpp"

namespace equivol {

enum class FamilyTag { OctGlue, P2k, Q2k, R2k };

const char* family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);

// A generated polyhedron together with the counts its construction promises.
// The counts always match the built complex (asserted by the generators),
// and the member passes the realizability check named by its tag: OctGlue
// and P2k the all-ideal right-angled one, Q2k the pi/3 one, R2k the compact
// right-angled one.
struct FamilyMember {
  AbstractPolyhedron polyhedron;
  FamilyTag tag = FamilyTag::OctGlue;
  int parameter = 0;
  int expected_n = 0;
  int expected_f = 0;
  int expected_white = 0;  // OctGlue only, else 0
  std::optional<double> exact_volume;  // OctGlue only
};

// Path-shaped chain of m regular ideal octahedra glued black face to black
// face.  Each gluing removes the shared triangle and its three edges, so the
// three neighboring white-face pairs amalgamate; counts come out N = 3m + 3,
// F = 3m + 5, |W| = m + 3, and the volume is exactly m V_8.
FamilyMember glue_octahedra(int m);

// Strip of the slope +-1 line arrangement between y = 0 and y = 2k, rolled
// into a cylinder of circumference 2k and capped: N = 8k^2 + 2k vertices,
// all 4-valent, F = N + 2.  ParameterTooSmall for k < 3.
FamilyMember family_P2k(int k);

// Honeycomb strip of height 2k sqrt(3) on a cylinder of circumference 3k,
// capped: N = 8k^2 + 2k trivalent vertices, F = 4k^2 + k + 2, and no
// triangular face.  ParameterTooSmall for k < 2.
FamilyMember family_Q2k(int k);

// family_Q2k with a tripod inserted into every boundary-row hexagon: three
// alternating edges are subdivided and joined to a new center, cutting the
// hexagon into three pentagons and promoting the adjacent boundary
// quadrilaterals to hexagons.  Every face ends up with at least 5 sides and
// every vertex stays trivalent.  ParameterTooSmall for k < 3.
FamilyMember family_R2k(int k);

struct AsymptoticRow {
  int parameter = 0;
  int n = 0;
  double lower = 0.0;
  double upper = 0.0;
  double upper_per_vertex = 0.0;
  double lower_per_vertex = 0.0;
};

// One row per parameter in [from, to], with the interval from the bounds
// dispatch matching the family tag.
std::vector<AsymptoticRow> asymptotic_report(FamilyTag tag, int from, int to);

}  // namespace equivol
