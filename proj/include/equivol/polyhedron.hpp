#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equivol/error.hpp"

namespace equivol {

// Equiangular dihedral-angle labels supported by the realizability checks.
enum class AngleKind { Pi2, Pi3 };

const char* angle_kind_name(AngleKind kind);
AngleKind angle_kind_from_name(const std::string& name);

using Edge = std::pair<int, int>;  // endpoints ordered low < high

// Combinatorial polyhedron given by its face cycles.  Construction validates
// that the data describes the face complex of a 3-polytope (Steinitz):
//   - every face is a cycle of >= 3 distinct vertices,
//   - vertex ids are 0-based and contiguous,
//   - every edge lies in exactly 2 faces,
//   - the 1-skeleton is simple,
//   - V - E + F == 2,
//   - the 1-skeleton is 3-connected.
class AbstractPolyhedron {
 public:
  static AbstractPolyhedron from_faces(std::vector<std::vector<int>> faces,
                                       std::optional<AngleKind> label = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Adjacency lists of the 1-skeleton, each sorted ascending.
  const std::vector<std::vector<int>>& skeleton() const { return skeleton_; }

  int vertex_degree(int v) const;
  int face_degree(int f) const { return static_cast<int>(faces_[f].size()); }

  // The two faces incident to an edge, in face-index order.
  std::array<int, 2> edge_faces(const Edge& e) const;
  int edge_index(const Edge& e) const;

  std::optional<AngleKind> label() const { return label_; }
  void set_label(std::optional<AngleKind> label) { label_ = label; }

 private:
  AbstractPolyhedron() = default;

  int vertex_count_ = 0;
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;                      // sorted lexicographically
  std::vector<std::array<int, 2>> edge_faces_;   // parallel to edges_
  std::map<Edge, int> edge_index_;
  std::vector<std::vector<int>> skeleton_;
  std::optional<AngleKind> label_;
};

// Dual incidence graph: one node per face, one edge per primal edge.
struct DualEdge {
  int face_a = 0;  // face_a < face_b
  int face_b = 0;
  Edge primal;
};

struct DualGraph {
  int node_count = 0;
  std::vector<DualEdge> edges;
  // Neighbor faces per node, sorted ascending.  In a valid polyhedron two
  // faces share at most one edge, so lists carry no duplicates.
  std::vector<std::vector<int>> adjacency;

  // Primal edge shared by a pair of adjacent faces.
  Edge primal_edge(int face_a, int face_b) const;
};

DualGraph dual(const AbstractPolyhedron& p);

// Dual polyhedron: one vertex per primal face, one face per primal vertex
// (the cycle of faces around that vertex).
AbstractPolyhedron dual_polyhedron(const AbstractPolyhedron& p);

struct DegreeProfile {
  std::map<int, int> vertex_degrees;  // degree -> count
  std::map<int, int> face_degrees;
};

DegreeProfile degree_profile(const AbstractPolyhedron& p);

// Brute-force vertex-connectivity >= 3 test over all vertex pairs.
// Requires a simple graph on >= 4 vertices (throws TooSmall otherwise).
bool is_three_connected(const std::vector<std::vector<int>>& adjacency);

// faces-JSON: {"faces": [[v, ...], ...]}
AbstractPolyhedron polyhedron_from_json(const std::string& text,
                                        std::optional<AngleKind> label = {});
AbstractPolyhedron polyhedron_from_json_stream(std::istream& in,
                                               std::optional<AngleKind> label = {});
std::string polyhedron_to_json(const AbstractPolyhedron& p);

}  // namespace equivol
