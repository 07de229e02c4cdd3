#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "equivol/lobachevsky.hpp"
#include "support/oracles.hpp"

using namespace equivol;

namespace {
constexpr double kPi = std::numbers::pi;

// Frozen quadrature oracle values (tests below also recompute them live).
constexpr double kOrthoPi6Pi3Pi6 = 0.2537354016024134;    // = V_3 / 4
constexpr double kOrthoPi5Pi3Pi5 = 0.093325539506788319;  // compact case
}  // namespace

TEST_CASE("stated decimal values of the constants") {
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(kPi / 2)) < 1e-12);
  CHECK(std::abs(lobachevsky(kPi / 4) - 3.66386 / 8) < 7e-7);
  CHECK(std::abs(lobachevsky(kPi / 6) - 1.01494 / 2) < 3e-6);
  CHECK(std::abs(constant_V8() - 3.66386) < 5e-6);
  CHECK(std::abs(constant_V3() - 1.01494) < 5e-6);
  CHECK(std::abs(constant_V8() - 8 * lobachevsky(kPi / 4)) < 1e-15);
  CHECK(std::abs(constant_V3() - 2 * lobachevsky(kPi / 6)) < 1e-15);
}

TEST_CASE("V8 equals four times Catalan's constant") {
  double k = catalan_constant();
  CHECK(std::abs(k - 0.915965594177219015) < 2e-13);
  CHECK(std::abs(constant_V8() - 4 * k) < 1e-10);
}

TEST_CASE("oddness is bit-exact") {
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    double t = dist(rng);
    CHECK(lobachevsky(-t) == -lobachevsky(t));
  }
}

TEST_CASE("pi-periodicity") {
  std::mt19937_64 rng(20240812);
  // theta = k/2^26 with |theta| < 2 makes theta + pi exact in doubles, so
  // the range reduction must reproduce the same value bit for bit.
  std::uniform_int_distribution<long> ticks(-(1L << 27), (1L << 27));
  for (int i = 0; i < 10000; ++i) {
    double t = static_cast<double>(ticks(rng)) / (1L << 26);
    double shifted = t + kPi;
    CHECK(lobachevsky(shifted) == lobachevsky(t));
    CHECK(lobachevsky(shifted + kPi) == lobachevsky(t));
  }
  // Arbitrary arguments pick up one rounding in theta + pi itself.
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    double t = dist(rng);
    CHECK(std::abs(lobachevsky(t + kPi) - lobachevsky(t)) < 1e-12);
  }
}

TEST_CASE("duplication identity") {
  std::mt19937_64 rng(20240813);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    double t = dist(rng);
    double lhs = lobachevsky(2 * t) / 2;
    double rhs = lobachevsky(t) + lobachevsky(t + kPi / 2);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("agrees with direct quadrature of the defining integral") {
  for (int i = 1; i <= 50; ++i) {
    double t = i * (kPi / 2) / 51;
    CHECK(std::abs(lobachevsky(t) - oracles::lobachevsky_by_quadrature(t)) <
          1e-8);
  }
}

TEST_CASE("maximum sits at pi/6") {
  double peak = lobachevsky(kPi / 6);
  for (int i = 0; i <= 1000; ++i) {
    CHECK(peak >= lobachevsky(i * kPi / 1000));
  }
}

TEST_CASE("cone volumes over ideal polygons") {
  CHECK(std::abs(cone_on_ideal_polygon({kPi / 4, kPi / 4, kPi / 4, kPi / 4}) -
                 constant_V8() / 2) < 1e-12);
  CHECK(std::abs(cone_on_ideal_polygon({kPi / 3, kPi / 3, kPi / 3}) -
                 constant_V3()) < 1e-10);
  // Boundary case: mathematically 0, and never allowed to go negative.
  double v = cone_on_ideal_polygon({kPi / 2, kPi / 2, kPi / 2});
  CHECK(v >= 0.0);
  CHECK(v < 1e-12);
  CHECK(volume_clamp_count() >= 0);
  CHECK_THROWS_AS(cone_on_ideal_polygon({-0.1}), Error);
  CHECK_THROWS_AS(cone_on_ideal_polygon({kPi / 2 + 0.01}), Error);
}

TEST_CASE("two ideal vertex tetrahedra") {
  CHECK(std::abs(two_ideal_vertex_tet_volume(kPi / 4) - constant_V8() / 16) <
        1e-12);
  CHECK(std::abs(16 * two_ideal_vertex_tet_volume(kPi / 4) - constant_V8()) <
        1e-12);
  CHECK(two_ideal_vertex_tet_volume(kPi / 2) == 0.0);
  CHECK(std::abs(two_ideal_vertex_tet_volume(kPi / 6) - constant_V3() / 6) <
        1e-10);
  CHECK_THROWS_AS(two_ideal_vertex_tet_volume(-0.2), Error);
  CHECK_THROWS_AS(two_ideal_vertex_tet_volume(2.0), Error);
}

TEST_CASE("orthoscheme closed form against the quadrature oracle") {
  double closed = orthoscheme_volume(kPi / 6, kPi / 3, kPi / 6);
  CHECK(std::abs(closed - kOrthoPi6Pi3Pi6) < 1e-8);
  CHECK(std::abs(closed - constant_V3() / 4) < 1e-12);
  double live = oracles::orthoscheme_volume_by_quadrature(kPi / 6, kPi / 3,
                                                          kPi / 6);
  CHECK(std::abs(live - kOrthoPi6Pi3Pi6) < 1e-10);
  CHECK(std::abs(closed - live) < 1e-8);

  double compact = orthoscheme_volume(kPi / 5, kPi / 3, kPi / 5);
  CHECK(std::abs(compact - kOrthoPi5Pi3Pi5) < 1e-8);
  double live_compact = oracles::orthoscheme_volume_by_quadrature(
      kPi / 5, kPi / 3, kPi / 5);
  CHECK(std::abs(live_compact - kOrthoPi5Pi3Pi5) < 1e-10);

  // One ideal vertex: beta = pi/2 - alpha collapses to the ideal formula.
  double one_ideal = oracles::orthoscheme_volume_by_quadrature(
      kPi / 4, kPi / 4, kPi / 4);
  CHECK(std::abs(one_ideal - lobachevsky(kPi / 4) / 2) < 1e-10);
}

TEST_CASE("orthoscheme formula properties") {
  CHECK(std::abs(orthoscheme_volume(kPi / 4, kPi / 4, kPi / 4) -
                 ideal_orthoscheme_volume(kPi / 4, kPi / 4)) < 1e-12);
  CHECK(std::abs(ideal_orthoscheme_volume(kPi / 4, kPi / 4) -
                 constant_V8() / 16) < 1e-12);

  std::mt19937_64 rng(20240814);
  std::uniform_real_distribution<double> dist(0.05, kPi / 2 - 0.05);
  int tested = 0;
  while (tested < 100) {
    double a = dist(rng), b = dist(rng), g = dist(rng);
    if (std::sin(a) * std::sin(a) * std::sin(g) * std::sin(g) -
            std::cos(b) * std::cos(b) >
        -1e-6)
      continue;
    ++tested;
    CHECK(std::abs(orthoscheme_volume(a, b, g) - orthoscheme_volume(g, b, a)) <
          1e-12);
    CHECK(orthoscheme_volume(a, b, g) >= 0.0);
  }
  for (int i = 0; i < 100; ++i) {
    double a = dist(rng), g = dist(rng);
    CHECK(std::abs(orthoscheme_volume(a, kPi / 2 - a, g) -
                   ideal_orthoscheme_volume(a, g)) < 1e-10);
    CHECK(std::abs(ideal_orthoscheme_volume(a, a) -
                   (lobachevsky(2 * a) + 2 * lobachevsky(kPi / 2 - a)) / 4) <
          1e-12);
  }
}

TEST_CASE("orthoscheme rejects bad input") {
  CHECK_THROWS_AS(orthoscheme_volume(0.0, kPi / 4, kPi / 4), Error);
  CHECK_THROWS_AS(orthoscheme_volume(kPi / 4, kPi / 2, kPi / 4), Error);
  bool threw = false;
  try {
    orthoscheme_volume(1.4, 1.5, 1.4);  // sin^2 sin^2 > cos^2
  } catch (const Error& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::NotAnOrthoscheme);
  }
  CHECK(threw);
  CHECK_THROWS_AS(ideal_orthoscheme_volume(0.0, kPi / 4), Error);
  CHECK_THROWS_AS(ideal_orthoscheme_volume(kPi / 4, kPi / 2), Error);
}

TEST_CASE("vertex volume caps") {
  CHECK(std::abs(vertex_volume_cap(8, 2 * kPi) - constant_V8() / 2) < 1e-12);
  CHECK(std::abs(vertex_volume_cap(6, 2 * kPi) - 1.5 * constant_V3()) < 1e-12);
  CHECK(std::abs(vertex_volume_cap(2, kPi / 3) - constant_V3() / 3) < 1e-10);
  CHECK_THROWS_AS(vertex_volume_cap(0, 1.0), Error);
  CHECK_THROWS_AS(vertex_volume_cap(4, -0.5), Error);
  CHECK_THROWS_AS(vertex_volume_cap(4, 4 * kPi / 2 + 0.1), Error);

  // The equal-angle value dominates every admissible angle vector.
  std::mt19937_64 rng(20240815);
  std::uniform_real_distribution<double> dist(0.0, kPi / 2);
  std::uniform_int_distribution<int> size(2, 10);
  for (int i = 0; i < 1000; ++i) {
    int m = size(rng);
    std::vector<double> a(m);
    double c = 0.0;
    for (double& x : a) {
      x = dist(rng);
      c += x;
    }
    double direct = 0.0;
    for (double x : a) direct += lobachevsky(kPi / 2 - x) / 2;
    CHECK(vertex_volume_cap(m, c) >= direct - 1e-12);
  }
}
