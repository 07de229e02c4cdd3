#include "equivol/andreev.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace equivol {

namespace {

void collect_cycles(const DualGraph& d, int k, std::vector<int>& path,
                    std::vector<char>& on_path,
                    std::vector<std::vector<int>>& out) {
  int last = path.back();
  int start = path.front();
  if (static_cast<int>(path.size()) == k) {
    bool closes = std::binary_search(d.adjacency[last].begin(),
                                     d.adjacency[last].end(), start);
    // One direction per cycle: second entry below the last.
    if (closes && path[1] < path[k - 1]) out.push_back(path);
    return;
  }
  for (int next : d.adjacency[last]) {
    if (next <= start || on_path[next]) continue;
    path.push_back(next);
    on_path[next] = 1;
    collect_cycles(d, k, path, on_path, out);
    on_path[next] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<PrismaticCircuit> prismatic_circuits(const AbstractPolyhedron& p,
                                                 int k) {
  if (k != 3 && k != 4) {
    throw Error(ErrorKind::UnsupportedK,
                "prismatic circuits supported for k in {3, 4}, got " +
                    std::to_string(k));
  }
  DualGraph d = dual(p);
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> on_path(d.node_count, 0);
  for (int s = 0; s < d.node_count; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    collect_cycles(d, k, path, on_path, cycles);
    on_path[s] = 0;
  }

  std::vector<PrismaticCircuit> out;
  for (const auto& cyc : cycles) {
    PrismaticCircuit c;
    c.k = k;
    c.dual_nodes = cyc;
    std::set<int> touched;
    bool disjoint = true;
    for (int i = 0; i < k && disjoint; ++i) {
      Edge e = d.primal_edge(cyc[i], cyc[(i + 1) % k]);
      disjoint = touched.insert(e.first).second && touched.insert(e.second).second;
      c.primal_edges.push_back(e);
    }
    if (disjoint) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const PrismaticCircuit& a, const PrismaticCircuit& b) {
              std::vector<int> sa = a.dual_nodes, sb = b.dual_nodes;
              std::sort(sa.begin(), sa.end());
              std::sort(sb.begin(), sb.end());
              if (sa != sb) return sa < sb;
              return a.dual_nodes < b.dual_nodes;
            });
  return out;
}

namespace {

bool faces_share_vertex(const AbstractPolyhedron& p, int a, int b,
                        std::vector<int>& shared) {
  std::set<int> in_a(p.faces()[a].begin(), p.faces()[a].end());
  for (int v : p.faces()[b]) {
    if (in_a.count(v)) shared.push_back(v);
  }
  std::sort(shared.begin(), shared.end());
  return !shared.empty();
}

int other_face(const AbstractPolyhedron& p, const Edge& e, int face) {
  auto fs = p.edge_faces(e);
  return fs[0] == face ? fs[1] : fs[0];
}

std::vector<FaceIntersectionWitness> separated_edge_violations(
    const AbstractPolyhedron& p) {
  std::vector<FaceIntersectionWitness> out;
  for (int j = 0; j < p.face_count(); ++j) {
    const auto& cycle = p.faces()[j];
    int m = static_cast<int>(cycle.size());
    for (int a = 0; a < m; ++a) {
      Edge ea{cycle[a], cycle[(a + 1) % m]};
      for (int b = a + 1; b < m; ++b) {
        Edge eb{cycle[b], cycle[(b + 1) % m]};
        if (ea.first == eb.first || ea.first == eb.second ||
            ea.second == eb.first || ea.second == eb.second)
          continue;
        int na = other_face(p, ea, j);
        int nb = other_face(p, eb, j);
        FaceIntersectionWitness w;
        w.face = j;
        w.edge_a = {std::min(ea.first, ea.second), std::max(ea.first, ea.second)};
        w.edge_b = {std::min(eb.first, eb.second), std::max(eb.first, eb.second)};
        w.neighbor_a = na;
        w.neighbor_b = nb;
        if (na == nb) {
          w.shared_vertices = p.faces()[na];
          std::sort(w.shared_vertices.begin(), w.shared_vertices.end());
          out.push_back(std::move(w));
        } else if (faces_share_vertex(p, na, nb, w.shared_vertices)) {
          out.push_back(std::move(w));
        }
      }
    }
  }
  return out;
}

void classify(RealizabilityReport& r, const AbstractPolyhedron& p,
              bool degrees_ok) {
  r.n = p.vertex_count();
  r.f = p.face_count();
  if (!degrees_ok) return;
  for (int v = 0; v < p.vertex_count(); ++v) {
    bool ideal = r.kind == AngleKind::Pi3 || p.vertex_degree(v) == 4;
    r.vertex_classes.push_back(ideal ? VertexClass::Ideal
                                     : VertexClass::Finite);
    (ideal ? r.n_ideal : r.n_finite)++;
  }
}

}  // namespace

RealizabilityReport check_pi2(const AbstractPolyhedron& p) {
  RealizabilityReport r;
  r.kind = AngleKind::Pi2;

  bool c1 = p.face_count() >= 6;

  bool c2 = true;
  for (int v = 0; v < p.vertex_count(); ++v) {
    int deg = p.vertex_degree(v);
    if (deg != 3 && deg != 4) {
      c2 = false;
      r.bad_degree_vertices.push_back(v);
    }
  }

  r.face_intersections = separated_edge_violations(p);
  bool c3 = r.face_intersections.empty();

  r.circuits = prismatic_circuits(p, 4);
  bool c4 = r.circuits.empty();

  r.conditions = {{"at_least_six_faces", c1},
                  {"vertex_degrees_in_3_4", c2},
                  {"separated_edge_neighbors_disjoint", c3},
                  {"no_prismatic_4_circuits", c4}};
  r.realizable = c1 && c2 && c3 && c4;
  classify(r, p, c2);
  return r;
}

RealizabilityReport check_pi3(const AbstractPolyhedron& p) {
  RealizabilityReport r;
  r.kind = AngleKind::Pi3;

  bool c1 = true;
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.vertex_degree(v) != 3) {
      c1 = false;
      r.bad_degree_vertices.push_back(v);
    }
  }

  r.circuits = prismatic_circuits(p, 3);
  bool c2 = r.circuits.empty();

  r.conditions = {{"all_vertices_degree_3", c1},
                  {"no_prismatic_3_circuits", c2}};
  r.realizable = c1 && c2;
  classify(r, p, c1);

  if (r.realizable && r.n > 4) {
    for (int f = 0; f < p.face_count(); ++f) {
      if (p.face_degree(f) == 3) r.triangle_diagnostic = true;
    }
  }
  return r;
}

RealizabilityReport check(const AbstractPolyhedron& p) {
  if (!p.label()) {
    throw Error(ErrorKind::UnknownKind, "polyhedron carries no angle label");
  }
  return *p.label() == AngleKind::Pi2 ? check_pi2(p) : check_pi3(p);
}

std::vector<std::string> failed_condition_names(const RealizabilityReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.conditions) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::string report_to_json(const RealizabilityReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = angle_kind_name(r.kind);
  j["realizable"] = r.realizable;
  j["conditions"] = nlohmann::ordered_json::array();
  for (const auto& c : r.conditions) {
    j["conditions"].push_back({{"name", c.name}, {"passed", c.passed}});
  }
  auto edge_json = [](const Edge& e) {
    return nlohmann::ordered_json::array({e.first, e.second});
  };
  nlohmann::ordered_json w;
  w["bad_degree_vertices"] = r.bad_degree_vertices;
  w["face_intersections"] = nlohmann::ordered_json::array();
  for (const auto& fi : r.face_intersections) {
    w["face_intersections"].push_back({{"face", fi.face},
                                       {"edge_a", edge_json(fi.edge_a)},
                                       {"edge_b", edge_json(fi.edge_b)},
                                       {"neighbor_a", fi.neighbor_a},
                                       {"neighbor_b", fi.neighbor_b},
                                       {"shared_vertices", fi.shared_vertices}});
  }
  w["prismatic_circuits"] = nlohmann::ordered_json::array();
  for (const auto& c : r.circuits) {
    nlohmann::ordered_json pe = nlohmann::ordered_json::array();
    for (const auto& e : c.primal_edges) pe.push_back(edge_json(e));
    w["prismatic_circuits"].push_back(
        {{"k", c.k}, {"dual_nodes", c.dual_nodes}, {"primal_edges", pe}});
  }
  j["witnesses"] = w;
  j["vertex_classes"] = nlohmann::ordered_json::array();
  for (auto vc : r.vertex_classes) {
    j["vertex_classes"].push_back(vc == VertexClass::Ideal ? "ideal"
                                                           : "finite");
  }
  j["counts"] = {{"n", r.n},
                 {"n_ideal", r.n_ideal},
                 {"n_finite", r.n_finite},
                 {"f", r.f}};
  if (r.kind == AngleKind::Pi3) j["triangle_diagnostic"] = r.triangle_diagnostic;
  return j.dump();
}

}  // namespace equivol
