#pragma once

#include <string>
#include <vector>

#include "equivol/polyhedron.hpp"

namespace equivol {

// Simple k-cycle in the dual graph whose primal edges are pairwise
// vertex-disjoint.  dual_nodes is canonical: starts at its smallest face,
// second entry smaller than the last; primal_edges[i] joins faces
// dual_nodes[i] and dual_nodes[(i+1) % k].
struct PrismaticCircuit {
  int k = 0;
  std::vector<int> dual_nodes;
  std::vector<Edge> primal_edges;
};

// All prismatic k-circuits, k in {3, 4} (UnsupportedK otherwise), ordered
// lexicographically by sorted face indices.
std::vector<PrismaticCircuit> prismatic_circuits(const AbstractPolyhedron& p,
                                                 int k);

enum class VertexClass { Finite, Ideal };

struct ConditionResult {
  std::string name;
  bool passed = false;
};

// Two faces of the same face meeting across a pair of endpoint-disjoint
// edges; shared_vertices is their (nonempty) intersection.
struct FaceIntersectionWitness {
  int face = 0;
  Edge edge_a;
  Edge edge_b;
  int neighbor_a = 0;
  int neighbor_b = 0;
  std::vector<int> shared_vertices;
};

struct RealizabilityReport {
  AngleKind kind = AngleKind::Pi2;
  bool realizable = false;
  std::vector<ConditionResult> conditions;  // all evaluated, never short-cut

  std::vector<int> bad_degree_vertices;
  std::vector<FaceIntersectionWitness> face_intersections;
  std::vector<PrismaticCircuit> circuits;

  // One entry per vertex once the degree condition holds, empty otherwise.
  std::vector<VertexClass> vertex_classes;
  int n = 0;
  int n_ideal = 0;
  int n_finite = 0;
  int f = 0;

  // pi3 only: realizable with n > 4 yet a triangular face present.  That
  // combination is impossible for honest input, so it flags corruption.
  bool triangle_diagnostic = false;
};

// Right-angled case: at least 6 faces, degrees in {3, 4}, neighbors across
// endpoint-disjoint edges of a common face never meet, no prismatic
// 4-circuits.  Degree-3 vertices come out Finite, degree-4 Ideal.
RealizabilityReport check_pi2(const AbstractPolyhedron& p);

// pi/3 case: every vertex degree 3 and no prismatic 3-circuits; all
// vertices Ideal when realizable.
RealizabilityReport check_pi3(const AbstractPolyhedron& p);

// Dispatch on p.label(); UnknownKind if the polyhedron carries none.
RealizabilityReport check(const AbstractPolyhedron& p);

std::vector<std::string> failed_condition_names(const RealizabilityReport& r);

std::string report_to_json(const RealizabilityReport& r);

}  // namespace equivol
