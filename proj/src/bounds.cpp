#include "equivol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "equivol/combinatorics.hpp"
#include "equivol/error.hpp"
#include "equivol/lobachevsky.hpp"

namespace equivol {

namespace {

constexpr double kPi = std::numbers::pi;

void push_lower(BoundInterval& b, const char* tag, double value, bool strict) {
  b.terms.push_back({tag, "lower", value, strict});
}

// Largest lower candidate wins, clamped at zero; on a value tie a strict
// inequality is the stronger claim and takes precedence.
void settle_lower(BoundInterval& b) {
  bool have = false;
  for (const auto& t : b.terms) {
    if (t.side != "lower") continue;
    const double v = std::max(t.value, 0.0);
    if (!have || v > b.lower ||
        (v == b.lower && t.strict && !b.lower_strict)) {
      b.lower = v;
      b.lower_strict = t.strict;
      have = true;
    }
  }
}

void set_upper(BoundInterval& b, const char* tag, double value, bool strict) {
  b.terms.push_back({tag, "upper", value, strict});
  b.upper = value;
  b.upper_strict = strict;
}

RealizabilityReport require_realizable(RealizabilityReport r) {
  if (!r.realizable) {
    throw Error(ErrorKind::NotRealizable,
                "bounds need a realizable polyhedron");
  }
  return r;
}

// The two bookkeeping routes to the same integer must agree; a mismatch
// means the vertex counts and face count are mutually inconsistent.
void require_consistent(long direct, long via_area) {
  if (direct != via_area) {
    throw Error(ErrorKind::EulerViolation, "boundary area bookkeeping");
  }
}

// Values within 1e-5 relative tolerance of an integer collapse to it, so a
// volume quoted to a few decimal places still inverts the closed forms
// exactly.
double snap(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-5 * std::max(1.0, std::abs(r))) {
    return r;
  }
  return x;
}

}  // namespace

double white_area(int n, int w) {
  if (w < 0 || w > n) {
    throw Error(ErrorKind::NegativeArea, "need n >= w >= 0");
  }
  return 2.0 * kPi * static_cast<double>(n - w);
}

double boundary_area(int n_ideal, int n_finite, int f) {
  const long combo = 8L * n_ideal + 3L * n_finite - 4L * f;
  if (n_ideal < 0 || n_finite < 0 || f < 0 || combo < 0) {
    throw Error(ErrorKind::NegativeArea, "need 8 n_ideal + 3 n_finite >= 4 f");
  }
  return kPi * static_cast<double>(combo) / 2.0;
}

double miyamoto_lower(double area) {
  if (area < 0.0) {
    throw Error(ErrorKind::NegativeArea, "area must be nonnegative");
  }
  return area * constant_V8() / (4.0 * kPi);
}

BoundInterval bounds_ideal_pi2(const AbstractPolyhedron& p) {
  const RealizabilityReport r = require_realizable(check_pi2(p));
  if (r.n_finite > 0) {
    throw Error(ErrorKind::HasFiniteVertices,
                "ideal bounds need every vertex 4-valent");
  }
  const FaceColoring coloring = two_color_faces(p);
  const int n = r.n;
  const int w = static_cast<int>(coloring.white.size());
  const double v8 = constant_V8();

  BoundInterval b;
  push_lower(b, "white_face_area", (n - w) * v8 / 2.0, false);
  push_lower(b, "black_face_area", (w - 2) * v8 / 2.0, false);
  push_lower(b, "color_average", (n - 2) * v8 / 4.0, false);
  settle_lower(b);
  set_upper(b, "ideal_vertex_cones", (n - 4) * v8 / 2.0, false);
  return b;
}

BoundInterval bounds_compact_pi2(const AbstractPolyhedron& p) {
  const RealizabilityReport r = require_realizable(check_pi2(p));
  if (r.n_ideal > 0) {
    throw Error(ErrorKind::HasIdealVertices,
                "compact bounds need every vertex 3-valent");
  }
  const long direct = r.n - 8L;
  require_consistent(direct, 3L * r.n - 4L * r.f);
  const double v8 = constant_V8();
  const double v3 = constant_V3();

  BoundInterval b;
  push_lower(b, "boundary_area", static_cast<double>(direct) * v8 / 32.0,
             false);
  settle_lower(b);
  set_upper(b, "finite_vertex_cells", (r.n - 10) * 5.0 * v3 / 8.0, true);
  return b;
}

BoundInterval bounds_mixed_pi2(const AbstractPolyhedron& p) {
  const RealizabilityReport r = require_realizable(check_pi2(p));
  if (r.n_ideal == 0 || r.n_finite == 0) {
    throw Error(ErrorKind::WrongDispatch,
                "mixed bounds need both vertex classes");
  }
  const long direct = 4L * r.n_ideal + r.n_finite - 8L;
  require_consistent(direct, 8L * r.n_ideal + 3L * r.n_finite - 4L * r.f);
  const double v8 = constant_V8();
  const double v3 = constant_V3();

  BoundInterval b;
  push_lower(b, "boundary_area", static_cast<double>(direct) * v8 / 32.0,
             false);
  settle_lower(b);
  set_upper(b, "mixed_vertex_cells",
            (r.n_ideal - 1) * v8 / 2.0 + r.n_finite * 5.0 * v3 / 8.0, true);
  return b;
}

BoundInterval bounds_ideal_pi3(const AbstractPolyhedron& p) {
  const RealizabilityReport r = require_realizable(check_pi3(p));
  const int n = r.n;
  const double v3 = constant_V3();

  BoundInterval b;
  if (n == 4) {
    // The regular ideal tetrahedron is rigid: an exact point interval.
    push_lower(b, "regular_tetrahedron", v3, false);
    settle_lower(b);
    set_upper(b, "regular_tetrahedron", v3, false);
    return b;
  }
  push_lower(b, "horoball_packing", n * v3 / 3.0, true);
  if (n <= 64) {
    const IndependentSet ind = max_independent_set(p.skeleton());
    push_lower(b, "independent_set",
               static_cast<double>(ind.vertices.size()) * v3, false);
  }
  push_lower(b, "independence_ratio", ((3 * n + 7) / 8) * v3, false);
  settle_lower(b);
  set_upper(b, "edge_cones", (3.0 * n - 14.0) * v3 / 2.0, false);
  return b;
}

BoundInterval bounds(const AbstractPolyhedron& p) {
  if (!p.label()) {
    throw Error(ErrorKind::UnknownKind, "polyhedron carries no angle label");
  }
  if (*p.label() == AngleKind::Pi3) {
    return bounds_ideal_pi3(p);
  }
  const RealizabilityReport r = require_realizable(check_pi2(p));
  if (r.n_finite == 0) {
    return bounds_ideal_pi2(p);
  }
  if (r.n_ideal == 0) {
    return bounds_compact_pi2(p);
  }
  return bounds_mixed_pi2(p);
}

int max_vertices_for_volume(double v, const std::string& kind) {
  if (!(v >= 0.0)) {
    throw Error(ErrorKind::BadInput, "volume must be nonnegative");
  }
  const double v8 = constant_V8();
  const double v3 = constant_V3();
  if (kind == "ideal_pi2") {
    return static_cast<int>(std::floor(snap(2.0 + 4.0 * v / v8)));
  }
  if (kind == "compact_pi2") {
    return static_cast<int>(std::floor(snap(8.0 + 32.0 * v / v8)));
  }
  if (kind == "ideal_pi3") {
    // volume > n V_3 / 3 excludes the endpoint: n < 3 v / V_3 strictly.
    const double t = snap(3.0 * v / v3);
    const double n_packing = (t == std::floor(t)) ? t - 1.0 : std::floor(t);
    // ceil(3 n / 8) V_3 <= v, so 3 n <= 8 floor(v / V_3).
    const double k = std::floor(snap(v / v3));
    const double n_ratio = std::floor(8.0 * k / 3.0);
    return static_cast<int>(std::min(n_packing, n_ratio));
  }
  throw Error(ErrorKind::UnknownKind, kind);
}

std::string bound_interval_to_json(const BoundInterval& b) {
  nlohmann::ordered_json j;
  j["lower"] = b.lower;
  j["lower_strict"] = b.lower_strict;
  j["upper"] = b.upper;
  j["upper_strict"] = b.upper_strict;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : b.terms) {
    nlohmann::ordered_json jt;
    jt["tag"] = t.tag;
    jt["side"] = t.side;
    jt["value"] = t.value;
    jt["strict"] = t.strict;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  return j.dump();
}

}  // namespace equivol
