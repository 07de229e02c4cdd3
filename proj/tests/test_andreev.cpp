#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <string>

#include "equivol/andreev.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace equivol;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(EQUIVOL_FIXTURES) + "/" + name);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return text;
}

// Re-check the advertised invariant of every returned circuit from scratch.
void verify_circuits(const AbstractPolyhedron& p,
                     const std::vector<PrismaticCircuit>& circuits, int k) {
  auto d = dual(p);
  for (const auto& c : circuits) {
    REQUIRE(c.k == k);
    REQUIRE(static_cast<int>(c.dual_nodes.size()) == k);
    REQUIRE(static_cast<int>(c.primal_edges.size()) == k);
    std::set<int> distinct(c.dual_nodes.begin(), c.dual_nodes.end());
    CHECK(static_cast<int>(distinct.size()) == k);
    CHECK(*std::min_element(c.dual_nodes.begin(), c.dual_nodes.end()) ==
          c.dual_nodes.front());
    CHECK(c.dual_nodes[1] < c.dual_nodes[k - 1]);
    std::set<int> touched;
    for (int i = 0; i < k; ++i) {
      int a = c.dual_nodes[i];
      int b = c.dual_nodes[(i + 1) % k];
      CHECK(d.primal_edge(a, b) == c.primal_edges[i]);
      CHECK(touched.insert(c.primal_edges[i].first).second);
      CHECK(touched.insert(c.primal_edges[i].second).second);
    }
  }
}

void matches_brute_force(const AbstractPolyhedron& p, int k) {
  auto got = prismatic_circuits(p, k);
  std::set<std::vector<int>> got_cycles;
  for (const auto& c : got) got_cycles.insert(c.dual_nodes);
  CHECK(got_cycles.size() == got.size());
  CHECK(got_cycles == oracles::brute_force_prismatic_circuits(p, k));
  verify_circuits(p, got, k);
}

}  // namespace

TEST_CASE("prismatic circuit enumeration matches stated examples") {
  auto cube4 = prismatic_circuits(fixtures::cube(), 4);
  REQUIRE(cube4.size() == 3);
  // The band of four lateral faces, with the four vertical primal edges.
  CHECK(cube4[2].dual_nodes == std::vector<int>{2, 3, 4, 5});
  CHECK(cube4[2].primal_edges ==
        std::vector<Edge>{{1, 5}, {2, 6}, {3, 7}, {0, 4}});
  CHECK(cube4[0].dual_nodes == std::vector<int>{0, 2, 1, 4});
  CHECK(cube4[1].dual_nodes == std::vector<int>{0, 3, 1, 5});

  CHECK(prismatic_circuits(fixtures::octahedron(), 4).empty());

  auto prism3 = prismatic_circuits(fixtures::triangular_prism(), 3);
  REQUIRE(prism3.size() == 1);
  CHECK(prism3[0].dual_nodes == std::vector<int>{2, 3, 4});
  CHECK(prism3[0].primal_edges == std::vector<Edge>{{1, 4}, {2, 5}, {0, 3}});

  CHECK_THROWS_AS(prismatic_circuits(fixtures::cube(), 2), Error);
  CHECK_THROWS_AS(prismatic_circuits(fixtures::cube(), 5), Error);
}

TEST_CASE("enumeration agrees with subset brute force on all fixtures") {
  for (int k : {3, 4}) {
    matches_brute_force(fixtures::tetrahedron(), k);
    matches_brute_force(fixtures::cube(), k);
    matches_brute_force(fixtures::octahedron(), k);
    matches_brute_force(fixtures::triangular_prism(), k);
    matches_brute_force(fixtures::pentagonal_prism(), k);
    matches_brute_force(fixtures::stacked_prism(), k);
    matches_brute_force(fixtures::square_antiprism(), k);
    matches_brute_force(fixtures::icosahedron(), k);
    matches_brute_force(fixtures::dodecahedron(), k);
  }
}

TEST_CASE("right angled checks match the golden reports") {
  CHECK(report_to_json(check_pi2(fixtures::octahedron())) ==
        read_golden("octahedron_pi2.golden.json"));
  CHECK(report_to_json(check_pi2(fixtures::cube())) ==
        read_golden("cube_pi2.golden.json"));
  CHECK(report_to_json(check_pi2(fixtures::dodecahedron())) ==
        read_golden("dodecahedron_pi2.golden.json"));
}

TEST_CASE("pi/3 checks match the golden reports") {
  CHECK(report_to_json(check_pi3(fixtures::tetrahedron())) ==
        read_golden("tetrahedron_pi3.golden.json"));
  CHECK(report_to_json(check_pi3(fixtures::cube())) ==
        read_golden("cube_pi3.golden.json"));
  CHECK(report_to_json(check_pi3(fixtures::triangular_prism())) ==
        read_golden("triangular_prism_pi3.golden.json"));
}

TEST_CASE("octahedron pi/2 report details") {
  auto r = check_pi2(fixtures::octahedron());
  CHECK(r.realizable);
  // All faces are triangles, so the separated-edge condition is vacuous.
  CHECK(r.face_intersections.empty());
  CHECK(r.n == 6);
  CHECK(r.n_ideal == 6);
  CHECK(r.n_finite == 0);
  CHECK(r.vertex_classes ==
        std::vector<VertexClass>(6, VertexClass::Ideal));
  CHECK(failed_condition_names(r).empty());
}

TEST_CASE("cube pi/2 fails only on prismatic 4-circuits") {
  auto r = check_pi2(fixtures::cube());
  CHECK_FALSE(r.realizable);
  CHECK(failed_condition_names(r) ==
        std::vector<std::string>{"no_prismatic_4_circuits"});
  REQUIRE(r.circuits.size() == 3);
  CHECK(r.vertex_classes == std::vector<VertexClass>(8, VertexClass::Finite));
}

TEST_CASE("stacked prism fails exactly the separated-edge condition") {
  auto r = check_pi2(fixtures::stacked_prism());
  CHECK_FALSE(r.realizable);
  CHECK(failed_condition_names(r) ==
        std::vector<std::string>{"separated_edge_neighbors_disjoint"});
  REQUIRE_FALSE(r.face_intersections.empty());
  for (const auto& w : r.face_intersections) {
    // Independent re-check of each witness.
    const auto& p = fixtures::stacked_prism();
    CHECK(w.neighbor_a != w.face);
    CHECK(w.neighbor_b != w.face);
    std::set<int> ea{w.edge_a.first, w.edge_a.second};
    CHECK(ea.count(w.edge_b.first) + ea.count(w.edge_b.second) == 0);
    REQUIRE_FALSE(w.shared_vertices.empty());
    std::set<int> na(p.faces()[w.neighbor_a].begin(),
                     p.faces()[w.neighbor_a].end());
    std::set<int> nb(p.faces()[w.neighbor_b].begin(),
                     p.faces()[w.neighbor_b].end());
    for (int v : w.shared_vertices) {
      CHECK(na.count(v) == 1);
      CHECK(nb.count(v) == 1);
    }
  }
}

TEST_CASE("pentagonal prism fails pi/2 via prismatic 4-circuits") {
  auto r = check_pi2(fixtures::pentagonal_prism());
  CHECK_FALSE(r.realizable);
  auto failed = failed_condition_names(r);
  CHECK(std::find(failed.begin(), failed.end(),
                  "no_prismatic_4_circuits") != failed.end());
  CHECK_FALSE(r.circuits.empty());
}

TEST_CASE("square antiprism passes pi/2 with all ideal vertices") {
  auto r = check_pi2(fixtures::square_antiprism());
  CHECK(r.realizable);
  CHECK(r.n == 8);
  CHECK(r.n_ideal == 8);
  CHECK(r.n_finite == 0);
}

TEST_CASE("icosahedron fails pi/2 on vertex degrees") {
  auto r = check_pi2(fixtures::icosahedron());
  CHECK_FALSE(r.realizable);
  auto failed = failed_condition_names(r);
  CHECK(std::find(failed.begin(), failed.end(), "vertex_degrees_in_3_4") !=
        failed.end());
  CHECK(r.bad_degree_vertices.size() == 12);
  CHECK(r.vertex_classes.empty());
  CHECK(r.n_ideal == 0);
  CHECK(r.n_finite == 0);
}

TEST_CASE("tetrahedron fails pi/2 for having too few faces") {
  auto r = check_pi2(fixtures::tetrahedron());
  CHECK_FALSE(r.realizable);
  auto failed = failed_condition_names(r);
  CHECK(std::find(failed.begin(), failed.end(), "at_least_six_faces") !=
        failed.end());
}

TEST_CASE("octahedron fails pi/3 on degrees") {
  auto r = check_pi3(fixtures::octahedron());
  CHECK_FALSE(r.realizable);
  CHECK(r.bad_degree_vertices.size() == 6);
  CHECK(failed_condition_names(r) ==
        std::vector<std::string>{"all_vertices_degree_3"});
}

TEST_CASE("pi/3 Euler bookkeeping on passing fixtures") {
  for (auto p : {fixtures::tetrahedron(), fixtures::cube(),
                 fixtures::dodecahedron()}) {
    auto r = check_pi3(p);
    CHECK(r.realizable);
    CHECK(r.n_ideal == r.n);
    CHECK(r.n_finite == 0);
    CHECK_FALSE(r.triangle_diagnostic);
  }
}

TEST_CASE("pi/2 Euler bookkeeping") {
  for (auto p : {fixtures::octahedron(), fixtures::cube(),
                 fixtures::dodecahedron(), fixtures::square_antiprism()}) {
    auto r = check_pi2(p);
    REQUIRE_FALSE(r.vertex_classes.empty());
    CHECK(r.n == r.n_ideal + r.n_finite);
    int e = (3 * r.n_finite + 4 * r.n_ideal) / 2;
    CHECK(e == p.edge_count());
    CHECK(r.f == 2 + e - r.n);
  }
}

TEST_CASE("label dispatch") {
  auto p = fixtures::cube();
  CHECK_THROWS_AS(check(p), Error);
  p.set_label(AngleKind::Pi3);
  CHECK(check(p).realizable);
  p.set_label(AngleKind::Pi2);
  CHECK_FALSE(check(p).realizable);
}
