#include "equivol/polyhedron.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace equivol {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Connectivity of `adjacency` restricted to vertices outside `banned`.
bool connected_without(const std::vector<std::vector<int>>& adjacency,
                       int banned_a, int banned_b) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<char> seen(n, 0);
  seen[banned_a] = seen[banned_b] = 1;
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) { start = v; break; }
  }
  if (start < 0) return true;
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adjacency[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n - 2;
}

}  // namespace

const char* angle_kind_name(AngleKind kind) {
  return kind == AngleKind::Pi2 ? "pi2" : "pi3";
}

AngleKind angle_kind_from_name(const std::string& name) {
  if (name == "pi2") return AngleKind::Pi2;
  if (name == "pi3") return AngleKind::Pi3;
  throw Error(ErrorKind::UnknownKind, "unknown angle kind '" + name + "'");
}

AbstractPolyhedron AbstractPolyhedron::from_faces(
    std::vector<std::vector<int>> faces, std::optional<AngleKind> label) {
  AbstractPolyhedron p;
  p.label_ = label;

  int max_vertex = -1;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& cycle = faces[f];
    if (cycle.size() < 3) {
      throw Error(ErrorKind::InvalidFace,
                  "face " + std::to_string(f) + " has fewer than 3 vertices");
    }
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) {
      throw Error(ErrorKind::InvalidFace,
                  "face " + std::to_string(f) + " repeats a vertex");
    }
    for (int v : cycle) {
      if (v < 0) {
        throw Error(ErrorKind::InvalidFace,
                    "face " + std::to_string(f) + " has negative vertex id");
      }
      max_vertex = std::max(max_vertex, v);
    }
  }
  const int n = max_vertex + 1;
  if (n < 4 || faces.size() < 4) {
    throw Error(ErrorKind::NotThreeConnected,
                "fewer than 4 vertices or faces");
  }

  std::vector<char> used(n, 0);
  for (const auto& cycle : faces)
    for (int v : cycle) used[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (!used[v]) {
      throw Error(ErrorKind::UnusedVertex,
                  "vertex " + std::to_string(v) + " appears in no face");
    }
  }

  // Each undirected edge must occur in exactly two face cycles.
  std::map<Edge, std::vector<int>> incidence;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& cycle = faces[f];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      incidence[make_edge(a, b)].push_back(static_cast<int>(f));
    }
  }
  for (const auto& [e, fs] : incidence) {
    if (fs.size() != 2) {
      throw Error(ErrorKind::EdgeNotShared,
                  "edge " + edge_str(e) + " lies in " +
                      std::to_string(fs.size()) + " faces, expected 2");
    }
  }

  p.vertex_count_ = n;
  p.faces_ = std::move(faces);
  for (const auto& [e, fs] : incidence) {
    p.edge_index_[e] = static_cast<int>(p.edges_.size());
    p.edges_.push_back(e);
    p.edge_faces_.push_back({fs[0], fs[1]});
  }

  const long euler = static_cast<long>(n) - static_cast<long>(p.edges_.size()) +
                     static_cast<long>(p.faces_.size());
  if (euler != 2) {
    throw Error(ErrorKind::EulerViolation,
                "V - E + F = " + std::to_string(euler) + ", expected 2");
  }

  p.skeleton_.assign(n, {});
  for (const auto& e : p.edges_) {
    p.skeleton_[e.first].push_back(e.second);
    p.skeleton_[e.second].push_back(e.first);
  }
  for (auto& nbrs : p.skeleton_) std::sort(nbrs.begin(), nbrs.end());

  if (!is_three_connected(p.skeleton_)) {
    throw Error(ErrorKind::NotThreeConnected, "1-skeleton is not 3-connected");
  }
  return p;
}

int AbstractPolyhedron::vertex_degree(int v) const {
  return static_cast<int>(skeleton_[v].size());
}

int AbstractPolyhedron::edge_index(const Edge& e) const {
  auto it = edge_index_.find(make_edge(e.first, e.second));
  if (it == edge_index_.end()) {
    throw Error(ErrorKind::BadInput, "no edge " + edge_str(e));
  }
  return it->second;
}

std::array<int, 2> AbstractPolyhedron::edge_faces(const Edge& e) const {
  return edge_faces_[edge_index(e)];
}

bool is_three_connected(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n < 4) {
    throw Error(ErrorKind::TooSmall,
                "3-connectivity needs >= 4 vertices, got " + std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!connected_without(adjacency, a, b)) return false;
    }
  }
  return true;
}

DualGraph dual(const AbstractPolyhedron& p) {
  DualGraph g;
  g.node_count = p.face_count();
  g.adjacency.assign(g.node_count, {});
  std::set<std::pair<int, int>> seen_pairs;
  for (int i = 0; i < p.edge_count(); ++i) {
    const Edge& e = p.edges()[i];
    auto fs = p.edge_faces(e);
    int a = std::min(fs[0], fs[1]);
    int b = std::max(fs[0], fs[1]);
    // Validated complexes never present the same face pair twice (two faces
    // of a 3-polytope share at most one edge); treat it as corruption.
    if (!seen_pairs.insert({a, b}).second) {
      throw Error(ErrorKind::NotSimple,
                  "faces " + std::to_string(a) + " and " + std::to_string(b) +
                      " share more than one edge");
    }
    g.edges.push_back({a, b, e});
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Edge DualGraph::primal_edge(int face_a, int face_b) const {
  int a = std::min(face_a, face_b);
  int b = std::max(face_a, face_b);
  for (const auto& e : edges) {
    if (e.face_a == a && e.face_b == b) return e.primal;
  }
  throw Error(ErrorKind::BadInput,
              "faces " + std::to_string(face_a) + " and " +
                  std::to_string(face_b) + " are not adjacent");
}

AbstractPolyhedron dual_polyhedron(const AbstractPolyhedron& p) {
  // Face cycle of the dual at primal vertex v: walk the faces around v,
  // stepping across the edges incident to v.
  std::vector<std::vector<int>> dual_faces;
  dual_faces.reserve(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) {
    // Edges at v -> their two incident faces.
    std::vector<Edge> at_v;
    for (int u : p.skeleton()[v]) at_v.push_back(make_edge(v, u));
    // face -> edges of that face incident to v (exactly 2 in a valid complex)
    std::map<int, std::vector<int>> face_edges;
    for (std::size_t i = 0; i < at_v.size(); ++i) {
      auto fs = p.edge_faces(at_v[i]);
      face_edges[fs[0]].push_back(static_cast<int>(i));
      face_edges[fs[1]].push_back(static_cast<int>(i));
    }
    for (const auto& [f, es] : face_edges) {
      if (es.size() != 2) {
        throw Error(ErrorKind::NotSimple,
                    "face " + std::to_string(f) + " touches vertex " +
                        std::to_string(v) + " along " +
                        std::to_string(es.size()) + " edges");
      }
    }
    // Start from the lowest-numbered incident face and walk the link.
    std::vector<int> cycle;
    int start = face_edges.begin()->first;
    int face = start;
    int via = face_edges[face][0];
    do {
      cycle.push_back(face);
      auto fs = p.edge_faces(at_v[via]);
      int next_face = (fs[0] == face) ? fs[1] : fs[0];
      const auto& es = face_edges[next_face];
      via = (es[0] == via) ? es[1] : es[0];
      face = next_face;
    } while (face != start);
    if (cycle.size() != face_edges.size()) {
      throw Error(ErrorKind::NotSimple,
                  "link of vertex " + std::to_string(v) +
                      " is not a single cycle");
    }
    dual_faces.push_back(std::move(cycle));
  }
  return AbstractPolyhedron::from_faces(std::move(dual_faces));
}

DegreeProfile degree_profile(const AbstractPolyhedron& p) {
  DegreeProfile dp;
  for (int v = 0; v < p.vertex_count(); ++v) dp.vertex_degrees[p.vertex_degree(v)]++;
  for (int f = 0; f < p.face_count(); ++f) dp.face_degrees[p.face_degree(f)]++;
  return dp;
}

AbstractPolyhedron polyhedron_from_json(const std::string& text,
                                        std::optional<AngleKind> label) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("faces-JSON parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array()) {
    throw Error(ErrorKind::BadInput, "faces-JSON needs a top-level \"faces\" array");
  }
  std::vector<std::vector<int>> faces;
  for (const auto& jf : j["faces"]) {
    if (!jf.is_array()) {
      throw Error(ErrorKind::BadInput, "faces-JSON face is not an array");
    }
    std::vector<int> cycle;
    for (const auto& jv : jf) {
      if (!jv.is_number_integer()) {
        throw Error(ErrorKind::BadInput, "faces-JSON vertex is not an integer");
      }
      cycle.push_back(jv.get<int>());
    }
    faces.push_back(std::move(cycle));
  }
  return AbstractPolyhedron::from_faces(std::move(faces), label);
}

AbstractPolyhedron polyhedron_from_json_stream(std::istream& in,
                                               std::optional<AngleKind> label) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return polyhedron_from_json(buf.str(), label);
}

std::string polyhedron_to_json(const AbstractPolyhedron& p) {
  nlohmann::ordered_json j;
  j["faces"] = p.faces();
  return j.dump();
}

}  // namespace equivol
