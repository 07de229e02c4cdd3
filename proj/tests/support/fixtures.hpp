#pragma once

#include <vector>

#include "equivol/polyhedron.hpp"

namespace equivol::fixtures {

inline std::vector<std::vector<int>> tetrahedron_faces() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {3, 2, 1}};
}

inline std::vector<std::vector<int>> cube_faces() {
  return {{0, 1, 2, 3}, {4, 5, 6, 7},
          {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
}

inline std::vector<std::vector<int>> octahedron_faces() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
          {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}

inline std::vector<std::vector<int>> triangular_prism_faces() {
  return {{0, 1, 2}, {3, 4, 5},
          {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}};
}

inline std::vector<std::vector<int>> pentagonal_prism_faces() {
  std::vector<std::vector<int>> faces = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    faces.push_back({i, j, 5 + j, 5 + i});
  }
  return faces;
}

// Two triangular prisms stacked along a triangle: bottom 0..2, middle 3..5,
// top 6..8.  The middle ring of vertices is 4-valent.
inline std::vector<std::vector<int>> stacked_prism_faces() {
  std::vector<std::vector<int>> faces = {{0, 1, 2}, {6, 7, 8}};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    faces.push_back({i, j, 3 + j, 3 + i});
    faces.push_back({3 + i, 3 + j, 6 + j, 6 + i});
  }
  return faces;
}

// Octahedron with one 4-valent vertex split into an edge (0, 1): vertices
// 0 and 1 have degree 3, the other five keep degree 4.  Passes the
// right-angled realizability conditions with mixed vertex classes.
inline std::vector<std::vector<int>> split_octahedron_faces() {
  return {{0, 2, 3}, {1, 4, 5}, {0, 3, 4, 1}, {1, 5, 2, 0},
          {6, 3, 2}, {6, 4, 3}, {6, 5, 4}, {6, 2, 5}};
}

// Bottom square 0..3, top square 4..7 rotated an eighth turn.
inline std::vector<std::vector<int>> square_antiprism_faces() {
  std::vector<std::vector<int>> faces = {{0, 1, 2, 3}, {4, 5, 6, 7}};
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    faces.push_back({i, j, 4 + j});
    faces.push_back({i, 4 + j, 4 + i});
  }
  return faces;
}

// North pole 0, upper ring 1..5, lower ring 6..10, south pole 11.
inline std::vector<std::vector<int>> icosahedron_faces() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    faces.push_back({0, 1 + i, 1 + j});
    faces.push_back({1 + i, 6 + i, 1 + j});
    faces.push_back({1 + j, 6 + i, 6 + j});
    faces.push_back({11, 6 + j, 6 + i});
  }
  return faces;
}

inline AbstractPolyhedron tetrahedron() {
  return AbstractPolyhedron::from_faces(tetrahedron_faces());
}
inline AbstractPolyhedron cube() {
  return AbstractPolyhedron::from_faces(cube_faces());
}
inline AbstractPolyhedron octahedron() {
  return AbstractPolyhedron::from_faces(octahedron_faces());
}
inline AbstractPolyhedron triangular_prism() {
  return AbstractPolyhedron::from_faces(triangular_prism_faces());
}
inline AbstractPolyhedron pentagonal_prism() {
  return AbstractPolyhedron::from_faces(pentagonal_prism_faces());
}
inline AbstractPolyhedron stacked_prism() {
  return AbstractPolyhedron::from_faces(stacked_prism_faces());
}
inline AbstractPolyhedron split_octahedron() {
  return AbstractPolyhedron::from_faces(split_octahedron_faces());
}
inline AbstractPolyhedron square_antiprism() {
  return AbstractPolyhedron::from_faces(square_antiprism_faces());
}
inline AbstractPolyhedron icosahedron() {
  return AbstractPolyhedron::from_faces(icosahedron_faces());
}
inline AbstractPolyhedron dodecahedron() {
  return dual_polyhedron(icosahedron());
}

}  // namespace equivol::fixtures
