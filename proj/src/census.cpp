#include "equivol/census.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <set>
#include <thread>
#include <utility>

#include "equivol/andreev.hpp"
#include "equivol/bounds.hpp"
#include "equivol/error.hpp"

#include "json.hpp"

namespace equivol {

namespace {

constexpr const char* kHeader = ">>planar_code<<";

std::string at_offset(std::size_t offset) {
  return " (record at byte " + std::to_string(offset) + ")";
}

std::string shortest_double(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

}  // namespace

ParsedPlanarCode parse_planar_code(const std::string& bytes) {
  ParsedPlanarCode out;
  std::size_t pos = 0;
  const std::size_t header_len = std::char_traits<char>::length(kHeader);
  if (bytes.size() >= 2 && bytes[0] == '>' && bytes[1] == '>') {
    if (bytes.compare(0, header_len, kHeader) != 0) {
      throw Error(ErrorKind::BadHeader,
                  "input opens with '>>' but not '>>planar_code<<'");
    }
    pos = header_len;
    out.had_header = true;
  }
  while (pos < bytes.size()) {
    const std::size_t offset = pos;
    const int n = static_cast<unsigned char>(bytes[pos++]);
    if (n == 0) {
      throw Error(ErrorKind::Unsupported,
                  "multi-byte planar_code escape" + at_offset(offset));
    }
    PlanarEmbeddedGraph graph;
    graph.n = n;
    graph.offset = offset;
    graph.rotations.resize(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        if (pos >= bytes.size()) {
          throw Error(ErrorKind::TruncatedRecord,
                      "stream ends inside vertex " + std::to_string(v) +
                          at_offset(offset));
        }
        const int b = static_cast<unsigned char>(bytes[pos++]);
        if (b == 0) break;
        if (b > n) {
          throw Error(ErrorKind::InconsistentRotation,
                      "neighbor " + std::to_string(b) + " exceeds n=" +
                          std::to_string(n) + at_offset(offset));
        }
        if (b == v + 1) {
          throw Error(ErrorKind::InconsistentRotation,
                      "vertex " + std::to_string(v) + " lists itself" +
                          at_offset(offset));
        }
        graph.rotations[v].push_back(b - 1);
      }
    }
    for (int v = 0; v < n; ++v) {
      std::vector<int> sorted = graph.rotations[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::InconsistentRotation,
                    "vertex " + std::to_string(v) +
                        " repeats a neighbor" + at_offset(offset));
      }
      for (const int u : graph.rotations[v]) {
        const auto& back = graph.rotations[u];
        if (std::count(back.begin(), back.end(), v) != 1) {
          throw Error(ErrorKind::InconsistentRotation,
                      "edge " + std::to_string(v) + "-" + std::to_string(u) +
                          " is not listed both ways" + at_offset(offset));
        }
      }
    }
    out.graphs.push_back(std::move(graph));
  }
  return out;
}

std::string serialize_planar_code(const ParsedPlanarCode& parsed) {
  std::string bytes;
  if (parsed.had_header) {
    bytes += kHeader;
  }
  for (const PlanarEmbeddedGraph& graph : parsed.graphs) {
    if (graph.n > 255) {
      throw Error(ErrorKind::Unsupported,
                  "graph on " + std::to_string(graph.n) +
                      " vertices does not fit single-byte planar_code");
    }
    bytes.push_back(static_cast<char>(graph.n));
    for (const auto& rotation : graph.rotations) {
      for (const int u : rotation) {
        bytes.push_back(static_cast<char>(u + 1));
      }
      bytes.push_back('\0');
    }
  }
  return bytes;
}

AbstractPolyhedron to_polyhedron(const PlanarEmbeddedGraph& graph,
                                 std::optional<AngleKind> label) {
  const int n = graph.n;
  if (n <= 0 || static_cast<int>(graph.rotations.size()) != n) {
    throw Error(ErrorKind::BadInput, "rotation list does not match n");
  }
  long darts = 0;
  std::vector<std::map<int, int>> index_at(n);
  for (int v = 0; v < n; ++v) {
    const auto& rotation = graph.rotations[v];
    darts += static_cast<long>(rotation.size());
    for (int i = 0; i < static_cast<int>(rotation.size()); ++i) {
      const int u = rotation[i];
      if (u < 0 || u >= n || u == v ||
          !index_at[v].emplace(u, i).second) {
        throw Error(ErrorKind::InconsistentRotation,
                    "bad neighbor at vertex " + std::to_string(v));
      }
    }
  }
  if (darts % 2 != 0) {
    throw Error(ErrorKind::InconsistentRotation, "odd dart count");
  }

  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) {
    used[v].assign(graph.rotations[v].size(), 0);
  }
  std::vector<std::vector<int>> faces;
  for (int v0 = 0; v0 < n; ++v0) {
    for (int i0 = 0; i0 < static_cast<int>(graph.rotations[v0].size()); ++i0) {
      if (used[v0][i0]) continue;
      std::vector<int> face;
      int v = v0;
      int i = i0;
      do {
        used[v][i] = 1;
        face.push_back(v);
        const int w = graph.rotations[v][i];
        const auto it = index_at[w].find(v);
        if (it == index_at[w].end()) {
          throw Error(ErrorKind::InconsistentRotation,
                      "edge " + std::to_string(v) + "-" + std::to_string(w) +
                          " is not listed both ways");
        }
        v = w;
        i = (it->second + 1) % static_cast<int>(graph.rotations[w].size());
      } while (!(v == v0 && i == i0));
      faces.push_back(std::move(face));
    }
  }

  const long e = darts / 2;
  const long f = static_cast<long>(faces.size());
  if (n - e + f != 2) {
    throw Error(ErrorKind::NotSpherical,
                "n - e + f = " + std::to_string(n - e + f));
  }
  return AbstractPolyhedron::from_faces(std::move(faces), label);
}

PlanarEmbeddedGraph from_polyhedron(const AbstractPolyhedron& p) {
  std::vector<std::vector<int>> faces = p.faces();
  const int fn = static_cast<int>(faces.size());

  const auto traverses = [](const std::vector<int>& face, int a, int b) {
    const int s = static_cast<int>(face.size());
    for (int i = 0; i < s; ++i) {
      if (face[i] == a && face[(i + 1) % s] == b) return true;
    }
    return false;
  };

  // Orient the faces consistently: across every edge the two incident
  // faces must run in opposite directions.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int fi = 0; fi < fn; ++fi) {
    const auto& face = faces[fi];
    const int s = static_cast<int>(face.size());
    for (int i = 0; i < s; ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % s];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(fi);
    }
  }
  std::vector<char> seen(fn, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int fi = queue[head];
    const auto face = faces[fi];  // copy: neighbors may be flipped below
    const int s = static_cast<int>(face.size());
    for (int i = 0; i < s; ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % s];
      for (const int fj : edge_faces[{std::min(a, b), std::max(a, b)}]) {
        if (fj == fi) continue;
        const bool same_direction = traverses(faces[fj], a, b);
        if (!seen[fj]) {
          if (same_direction) {
            std::reverse(faces[fj].begin(), faces[fj].end());
          }
          seen[fj] = 1;
          queue.push_back(fj);
        } else if (same_direction) {
          throw Error(ErrorKind::InconsistentRotation,
                      "faces cannot be oriented consistently");
        }
      }
    }
  }

  // At each corner a -> v -> b the walk leaving along b continues the face
  // entered along a, which pins the cyclic neighbor order at v.
  const int n = p.vertex_count();
  std::vector<std::map<int, int>> succ(n);
  for (const auto& face : faces) {
    const int s = static_cast<int>(face.size());
    for (int i = 0; i < s; ++i) {
      const int a = face[i];
      const int v = face[(i + 1) % s];
      const int b = face[(i + 2) % s];
      if (!succ[v].emplace(a, b).second) {
        throw Error(ErrorKind::InconsistentRotation,
                    "vertex " + std::to_string(v) + " has a doubled corner");
      }
    }
  }

  PlanarEmbeddedGraph graph;
  graph.n = n;
  graph.rotations.resize(n);
  for (int v = 0; v < n; ++v) {
    const std::size_t degree = p.skeleton()[v].size();
    if (succ[v].size() != degree) {
      throw Error(ErrorKind::InconsistentRotation,
                  "vertex " + std::to_string(v) + " misses corners");
    }
    int x = p.skeleton()[v][0];
    for (std::size_t step = 0; step < degree; ++step) {
      graph.rotations[v].push_back(x);
      x = succ[v].at(x);
    }
    if (x != graph.rotations[v][0] ||
        std::set<int>(graph.rotations[v].begin(), graph.rotations[v].end())
                .size() != degree) {
      throw Error(ErrorKind::InconsistentRotation,
                  "link of vertex " + std::to_string(v) + " is not a circle");
    }
  }
  return graph;
}

namespace {

std::optional<std::string> witness_summary(const RealizabilityReport& report) {
  std::vector<std::string> parts;
  if (!report.bad_degree_vertices.empty()) {
    parts.push_back("bad_degree_vertices=" +
                    std::to_string(report.bad_degree_vertices.size()));
  }
  if (!report.face_intersections.empty()) {
    parts.push_back("face_intersections=" +
                    std::to_string(report.face_intersections.size()));
  }
  if (!report.circuits.empty()) {
    parts.push_back("prismatic_circuits=" +
                    std::to_string(report.circuits.size()));
  }
  if (parts.empty()) return std::nullopt;
  std::string joined = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    joined += "; " + parts[i];
  }
  return joined;
}

CensusRecord annotate_one(const PlanarEmbeddedGraph& graph, AngleKind ak,
                          const std::string& kind, int id,
                          const std::string& source_name) {
  CensusRecord rec;
  rec.id = id;
  rec.source = source_name + ":" + std::to_string(graph.offset);
  rec.kind = kind;
  rec.n = graph.n;
  try {
    const AbstractPolyhedron poly = to_polyhedron(graph, ak);
    const RealizabilityReport report = check(poly);
    rec.n = report.n;
    rec.n_ideal = report.n_ideal;
    rec.n_finite = report.n_finite;
    rec.f = report.f;
    rec.realizable = report.realizable;
    if (report.realizable) {
      const BoundInterval b = bounds(poly);
      rec.lower = b.lower;
      rec.lower_strict = b.lower_strict;
      rec.upper = b.upper;
      rec.upper_strict = b.upper_strict;
    } else {
      rec.failed_conditions = failed_condition_names(report);
      rec.notes = witness_summary(report);
    }
  } catch (const Error& e) {
    rec.realizable = false;
    rec.notes = e.what();
  }
  return rec;
}

}  // namespace

std::vector<CensusRecord> annotate(const std::vector<PlanarEmbeddedGraph>& graphs,
                                   const std::string& kind, int jobs,
                                   const std::string& source_name) {
  const AngleKind ak = angle_kind_from_name(kind);
  std::vector<CensusRecord> records(graphs.size());
  const auto work = [&](std::atomic<std::size_t>& next) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) break;
      records[i] = annotate_one(graphs[i], ak, kind, static_cast<int>(i),
                                source_name);
    }
  };
  std::atomic<std::size_t> next{0};
  if (jobs <= 1) {
    work(next);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] { work(next); });
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  return records;
}

std::vector<CensusRecord> filter_by_volume_cap(
    const std::vector<CensusRecord>& records, double cap) {
  std::vector<CensusRecord> kept;
  for (const CensusRecord& rec : records) {
    if (!rec.realizable || !rec.lower.has_value()) continue;
    const bool strict = rec.lower_strict.value_or(false);
    if (strict ? *rec.lower < cap : *rec.lower <= cap) {
      kept.push_back(rec);
    }
  }
  return kept;
}

std::string records_to_jsonl(const std::vector<CensusRecord>& records) {
  std::string out;
  for (const CensusRecord& rec : records) {
    nlohmann::ordered_json row;
    row["id"] = rec.id;
    row["source"] = rec.source;
    row["kind"] = rec.kind;
    row["n"] = rec.n;
    row["n_ideal"] = rec.n_ideal;
    row["n_finite"] = rec.n_finite;
    row["f"] = rec.f;
    row["realizable"] = rec.realizable;
    row["failed_conditions"] = rec.failed_conditions;
    row["lower"] = rec.lower ? nlohmann::ordered_json(*rec.lower)
                             : nlohmann::ordered_json(nullptr);
    row["lower_strict"] = rec.lower_strict
                              ? nlohmann::ordered_json(*rec.lower_strict)
                              : nlohmann::ordered_json(nullptr);
    row["upper"] = rec.upper ? nlohmann::ordered_json(*rec.upper)
                             : nlohmann::ordered_json(nullptr);
    row["upper_strict"] = rec.upper_strict
                              ? nlohmann::ordered_json(*rec.upper_strict)
                              : nlohmann::ordered_json(nullptr);
    row["notes"] = rec.notes ? nlohmann::ordered_json(*rec.notes)
                             : nlohmann::ordered_json(nullptr);
    out += row.dump();
    out += '\n';
  }
  return out;
}

std::string records_to_csv(const std::vector<CensusRecord>& records) {
  std::string out = "id,kind,n,realizable,lower,upper\n";
  for (const CensusRecord& rec : records) {
    out += std::to_string(rec.id);
    out += ',';
    out += rec.kind;
    out += ',';
    out += std::to_string(rec.n);
    out += ',';
    out += rec.realizable ? "true" : "false";
    out += ',';
    if (rec.lower) out += shortest_double(*rec.lower);
    out += ',';
    if (rec.upper) out += shortest_double(*rec.upper);
    out += '\n';
  }
  return out;
}

}  // namespace equivol
