#pragma once

#include <vector>

#include "equivol/polyhedron.hpp"

namespace equivol {

// Proper 2-coloring of the faces of a 4-valent spherical skeleton.
// black and white partition the faces, are each sorted, and no two
// same-colored faces share an edge; |black| >= |white|.
struct FaceColoring {
  std::vector<int> black;
  std::vector<int> white;
};

// Deterministic: face 0 seeds black, colors swap at the end only if white
// came out larger.  NotFourValent unless every vertex has degree 4;
// NotBipartite signals a corrupt dual (impossible for valid input).
FaceColoring two_color_faces(const AbstractPolyhedron& p);

struct IndependentSet {
  std::vector<int> vertices;  // sorted, pairwise non-adjacent
  bool exact = false;         // true: maximum; false: greedy lower witness
};

// Maximum independent set by branch and bound for graphs on <= 64 vertices;
// larger graphs get a greedy set with exact == false.
IndependentSet max_independent_set(
    const std::vector<std::vector<int>>& adjacency);

// F from the vertex classes of an all-right-angled polyhedron:
// E = (3 n_f + 4 n_inf)/2, F = 2 + E - (n_inf + n_f).
// ParityError when 3 n_f + 4 n_inf is odd.
int euler_face_count_identity(int n_inf, int n_f);

}  // namespace equivol
