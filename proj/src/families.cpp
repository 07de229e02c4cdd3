#include "equivol/families.hpp"

#include <array>
#include <map>
#include <utility>

#include "equivol/bounds.hpp"
#include "equivol/error.hpp"
#include "equivol/lobachevsky.hpp"

namespace equivol {

namespace {

// Regular octahedron, apex 0, equator 1..4, apex 5.  Faces at even index
// positions of kOctBlack form one proper face-coloring class.
constexpr std::array<std::array<int, 3>, 8> kOctFaces = {{{0, 1, 2},
                                                          {0, 2, 3},
                                                          {0, 3, 4},
                                                          {0, 4, 1},
                                                          {5, 2, 1},
                                                          {5, 3, 2},
                                                          {5, 4, 3},
                                                          {5, 1, 4}}};
constexpr std::array<bool, 8> kOctBlack = {true, false, true,  false,
                                           false, true, false, true};
constexpr int kEntryFace = 0;  // {0, 1, 2}
constexpr int kExitFace = 2;   // {0, 3, 4}

// Walk from u to v the long way round the cycle, so every vertex appears
// once and the direct edge (u, v) is skipped.
std::vector<int> long_way(const std::vector<int>& cycle, int u, int v) {
  const int s = static_cast<int>(cycle.size());
  for (int i = 0; i < s; ++i) {
    std::vector<int> out;
    if (cycle[i] == u && cycle[(i + 1) % s] == v) {
      for (int t = 0; t < s; ++t) {
        out.push_back(cycle[(i - t + s) % s]);
      }
      return out;
    }
    if (cycle[i] == v && cycle[(i + 1) % s] == u) {
      for (int t = 0; t < s; ++t) {
        out.push_back(cycle[(i + 1 + t) % s]);
      }
      return out;
    }
  }
  throw Error(ErrorKind::BadInput, "cycle does not contain the edge");
}

bool has_edge(const std::vector<int>& cycle, int u, int v) {
  const int s = static_cast<int>(cycle.size());
  for (int i = 0; i < s; ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % s];
    if ((a == u && b == v) || (a == v && b == u)) {
      return true;
    }
  }
  return false;
}

void require_parameter(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw Error(ErrorKind::ParameterTooSmall, what);
  }
}

}  // namespace

const char* family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::OctGlue:
      return "octglue";
    case FamilyTag::P2k:
      return "p2k";
    case FamilyTag::Q2k:
      return "q2k";
    case FamilyTag::R2k:
      return "r2k";
  }
  throw Error(ErrorKind::UnknownKind, "family tag");
}

FamilyTag family_tag_from_name(const std::string& name) {
  if (name == "octglue") return FamilyTag::OctGlue;
  if (name == "p2k") return FamilyTag::P2k;
  if (name == "q2k") return FamilyTag::Q2k;
  if (name == "r2k") return FamilyTag::R2k;
  throw Error(ErrorKind::UnknownKind, "family name: " + name);
}

FamilyMember glue_octahedra(int m) {
  require_parameter(m, 1, "octahedron chains need m >= 1");

  std::vector<std::vector<int>> faces;
  std::vector<std::pair<int, int>> removed_edges;
  std::array<int, 6> map{};
  int next_id = 0;
  for (int j = 0; j < m; ++j) {
    if (j == 0) {
      for (int i = 0; i < 6; ++i) {
        map[i] = next_id++;
      }
    } else {
      // The chain shares local vertex 0 throughout; locals 1 and 2 land on
      // the previous octahedron's exit corners 3 and 4.
      const int spine = map[0];
      const int a = map[3];
      const int b = map[4];
      map = {spine, a, b, next_id, next_id + 1, next_id + 2};
      next_id += 3;
      removed_edges.emplace_back(spine, a);
      removed_edges.emplace_back(a, b);
      removed_edges.emplace_back(spine, b);
    }
    for (int idx = 0; idx < 8; ++idx) {
      if ((idx == kEntryFace && j > 0) || (idx == kExitFace && j < m - 1)) {
        continue;
      }
      faces.push_back({map[kOctFaces[idx][0]], map[kOctFaces[idx][1]],
                       map[kOctFaces[idx][2]]});
    }
  }

  // Dropping a glued triangle flattens its three edges; the white faces on
  // either side of each flattened edge amalgamate into one.
  for (const auto& [u, v] : removed_edges) {
    int first = -1;
    int second = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
      if (has_edge(faces[i], u, v)) {
        (first < 0 ? first : second) = i;
      }
    }
    if (first < 0 || second < 0) {
      throw Error(ErrorKind::EdgeNotShared, "glued edge lost its two faces");
    }
    std::vector<int> merged = long_way(faces[first], u, v);
    const std::vector<int> other = long_way(faces[second], v, u);
    merged.insert(merged.end(), other.begin() + 1, other.end() - 1);
    faces[first] = std::move(merged);
    faces.erase(faces.begin() + second);
  }

  FamilyMember member{AbstractPolyhedron::from_faces(faces, AngleKind::Pi2),
                      FamilyTag::OctGlue,
                      m,
                      3 * m + 3,
                      3 * m + 5,
                      m + 3,
                      m * constant_V8()};
  return member;
}

FamilyMember family_P2k(int k) {
  require_parameter(k, 3, "P family needs k >= 3");
  const int period = 4 * k;  // doubled x coordinates, one cylinder wrap
  const int top = 4 * k;     // doubled y coordinates
  // Vertices sit at (x, y) with x = y mod 2; id rows are y levels.
  const auto vid = [&](int x, int y) {
    x = ((x % period) + period) % period;
    return y * 2 * k + (x >> 1);
  };

  std::vector<std::vector<int>> faces;
  std::vector<int> cap;
  for (int i = 0; i < 2 * k; ++i) {
    cap.push_back(vid(2 * i, 0));
  }
  faces.push_back(cap);
  for (int i = 0; i < 2 * k; ++i) {
    faces.push_back({vid(2 * i, 0), vid(2 * i + 2, 0), vid(2 * i + 1, 1)});
  }
  for (int cy = 1; cy < top; ++cy) {
    for (int cx = 1 - (cy % 2); cx < period; cx += 2) {
      faces.push_back({vid(cx, cy - 1), vid(cx + 1, cy), vid(cx, cy + 1),
                       vid(cx - 1, cy)});
    }
  }
  for (int i = 0; i < 2 * k; ++i) {
    faces.push_back(
        {vid(2 * i, top), vid(2 * i + 1, top - 1), vid(2 * i + 2, top)});
  }
  cap.clear();
  for (int i = 0; i < 2 * k; ++i) {
    cap.push_back(vid(2 * i, top));
  }
  faces.push_back(cap);

  const int n = 8 * k * k + 2 * k;
  return {AbstractPolyhedron::from_faces(faces, AngleKind::Pi2),
          FamilyTag::P2k,
          k,
          n,
          n + 2,
          0,
          std::nullopt};
}

namespace {

// Honeycomb strip bookkeeping shared by the Q and R generators.  Doubled
// coordinates: hexagon row b spans levels b..b+2, the strip is 0..4k, and x
// runs mod 6k.  Level y holds vertices at x = 3y and 3y+2 mod 6.
struct HexStrip {
  int k = 0;
  int period = 0;
  int top = 0;

  explicit HexStrip(int k_in) : k(k_in), period(6 * k_in), top(4 * k_in) {}

  int vid(int x, int y) const {
    x = ((x % period) + period) % period;
    const int r = (3 * y) % 6;
    const int rank = (x / 6) * 2 + ((x % 6 == r) ? 0 : 1);
    return y * 2 * k + rank;
  }

  std::vector<int> hexagon(int a, int b) const {
    const int base = 6 * a + 3 * b;
    return {vid(base, b),     vid(base + 2, b),     vid(base + 3, b + 1),
            vid(base + 2, b + 2), vid(base, b + 2), vid(base - 1, b + 1)};
  }

  std::vector<int> bottom_quad(int a) const {
    return {vid(6 * a + 2, 0), vid(6 * a + 6, 0), vid(6 * a + 5, 1),
            vid(6 * a + 3, 1)};
  }

  std::vector<int> top_quad(int a) const {
    return {vid(6 * a + 2, top), vid(6 * a + 3, top - 1),
            vid(6 * a + 5, top - 1), vid(6 * a + 6, top)};
  }

  std::vector<int> cap(int y) const {
    std::vector<int> cycle;
    for (int a = 0; a < k; ++a) {
      cycle.push_back(vid(6 * a, y));
      cycle.push_back(vid(6 * a + 2, y));
    }
    return cycle;
  }
};

}  // namespace

FamilyMember family_Q2k(int k) {
  require_parameter(k, 2, "Q family needs k >= 2");
  const HexStrip strip(k);

  std::vector<std::vector<int>> faces;
  faces.push_back(strip.cap(0));
  for (int a = 0; a < k; ++a) {
    faces.push_back(strip.bottom_quad(a));
  }
  for (int b = 0; b <= strip.top - 2; ++b) {
    for (int a = 0; a < k; ++a) {
      faces.push_back(strip.hexagon(a, b));
    }
  }
  for (int a = 0; a < k; ++a) {
    faces.push_back(strip.top_quad(a));
  }
  faces.push_back(strip.cap(strip.top));

  return {AbstractPolyhedron::from_faces(faces, AngleKind::Pi3),
          FamilyTag::Q2k,
          k,
          8 * k * k + 2 * k,
          4 * k * k + k + 2,
          0,
          std::nullopt};
}

FamilyMember family_R2k(int k) {
  require_parameter(k, 3, "R family needs k >= 3");
  const HexStrip strip(k);

  std::vector<std::vector<int>> faces;
  faces.push_back(strip.cap(0));
  for (int a = 0; a < k; ++a) {
    faces.push_back(strip.bottom_quad(a));
  }
  for (int b = 1; b <= strip.top - 3; ++b) {
    for (int a = 0; a < k; ++a) {
      faces.push_back(strip.hexagon(a, b));
    }
  }
  for (int a = 0; a < k; ++a) {
    faces.push_back(strip.top_quad(a));
  }
  faces.push_back(strip.cap(strip.top));

  // Tripods: subdivide three alternating edges of each boundary-row hexagon
  // and join the midpoints to a fresh center, making three pentagons.  The
  // alternating triple is chosen to hit both neighboring boundary quads.
  int next_id = 8 * k * k + 2 * k;
  std::map<std::pair<int, int>, int> midpoint_of;
  const auto subdivide = [&](int u, int v) {
    const int mid = next_id++;
    midpoint_of[{std::min(u, v), std::max(u, v)}] = mid;
    return mid;
  };
  for (int a = 0; a < k; ++a) {
    const std::vector<int> h = strip.hexagon(a, 0);
    const int m23 = subdivide(h[1], h[2]);
    const int m45 = subdivide(h[3], h[4]);
    const int m61 = subdivide(h[5], h[0]);
    const int c = next_id++;
    faces.push_back({h[0], h[1], m23, c, m61});
    faces.push_back({m23, h[2], h[3], m45, c});
    faces.push_back({m45, h[4], h[5], m61, c});
  }
  for (int a = 0; a < k; ++a) {
    const std::vector<int> h = strip.hexagon(a, strip.top - 2);
    const int m12 = subdivide(h[0], h[1]);
    const int m34 = subdivide(h[2], h[3]);
    const int m56 = subdivide(h[4], h[5]);
    const int c = next_id++;
    faces.push_back({m12, h[1], h[2], m34, c});
    faces.push_back({m34, h[3], h[4], m56, c});
    faces.push_back({m56, h[5], h[0], m12, c});
  }

  // Insert each midpoint into the one remaining face along its edge.
  for (auto& face : faces) {
    for (int i = 0; i < static_cast<int>(face.size()); ++i) {
      const int u = face[i];
      const int v = face[(i + 1) % face.size()];
      const auto it = midpoint_of.find({std::min(u, v), std::max(u, v)});
      if (it != midpoint_of.end()) {
        face.insert(face.begin() + i + 1, it->second);
        ++i;
      }
    }
  }

  return {AbstractPolyhedron::from_faces(faces, AngleKind::Pi2),
          FamilyTag::R2k,
          k,
          8 * k * k + 10 * k,
          4 * k * k + 5 * k + 2,
          0,
          std::nullopt};
}

std::vector<AsymptoticRow> asymptotic_report(FamilyTag tag, int from, int to) {
  std::vector<AsymptoticRow> rows;
  for (int parameter = from; parameter <= to; ++parameter) {
    FamilyMember member = [&] {
      switch (tag) {
        case FamilyTag::OctGlue:
          return glue_octahedra(parameter);
        case FamilyTag::P2k:
          return family_P2k(parameter);
        case FamilyTag::Q2k:
          return family_Q2k(parameter);
        case FamilyTag::R2k:
          return family_R2k(parameter);
      }
      throw Error(ErrorKind::UnknownKind, "family tag");
    }();
    const BoundInterval b = bounds(member.polyhedron);
    const double n = member.polyhedron.vertex_count();
    rows.push_back({parameter, member.polyhedron.vertex_count(), b.lower,
                    b.upper, b.upper / n, b.lower / n});
  }
  return rows;
}

}  // namespace equivol
