#include "equivol/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace equivol {

FaceColoring two_color_faces(const AbstractPolyhedron& p) {
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.vertex_degree(v) != 4) {
      throw Error(ErrorKind::NotFourValent,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(p.vertex_degree(v)));
    }
  }
  DualGraph d = dual(p);
  std::vector<int> color(d.node_count, -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop();
    for (int g : d.adjacency[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorKind::NotBipartite,
                    "faces " + std::to_string(f) + " and " +
                        std::to_string(g) + " conflict");
      }
    }
  }
  FaceColoring out;
  for (int f = 0; f < d.node_count; ++f) {
    (color[f] == 0 ? out.black : out.white).push_back(f);
  }
  if (out.black.size() < out.white.size()) std::swap(out.black, out.white);
  return out;
}

namespace {

struct MisSearch {
  const std::vector<std::uint64_t>& nbr;
  std::uint64_t best_set = 0;
  int best = 0;

  void run(std::uint64_t alive, std::uint64_t chosen, int count) {
    if (count + std::popcount(alive) <= best) return;
    if (!alive) {
      best = count;
      best_set = chosen;
      return;
    }
    // Pivot on the busiest remaining vertex: both branches shrink fast.
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t rest = alive; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int deg = std::popcount(nbr[v] & alive);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    std::uint64_t bit = std::uint64_t{1} << pivot;
    run((alive & ~bit) & ~nbr[pivot], chosen | bit, count + 1);
    if (pivot_deg > 0) run(alive & ~bit, chosen, count);
  }
};

}  // namespace

IndependentSet max_independent_set(
    const std::vector<std::vector<int>>& adjacency) {
  int n = static_cast<int>(adjacency.size());
  IndependentSet out;
  if (n <= 64) {
    std::vector<std::uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u : adjacency[v]) nbr[v] |= std::uint64_t{1} << u;
    MisSearch search{nbr};
    std::uint64_t all =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search.run(all, 0, 0);
    for (int v = 0; v < n; ++v) {
      if (search.best_set >> v & 1) out.vertices.push_back(v);
    }
    out.exact = true;
    return out;
  }
  // Greedy: repeatedly take a vertex of minimum remaining degree.
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adjacency[v].size());
  int remaining = n;
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && (pick == -1 || degree[v] < degree[pick])) pick = v;
    }
    out.vertices.push_back(pick);
    alive[pick] = 0;
    --remaining;
    for (int u : adjacency[pick]) {
      if (alive[u]) {
        alive[u] = 0;
        --remaining;
        for (int w : adjacency[u]) degree[w]--;
      }
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.exact = false;
  return out;
}

int euler_face_count_identity(int n_inf, int n_f) {
  long twice_e = 3L * n_f + 4L * n_inf;
  if (twice_e % 2 != 0) {
    throw Error(ErrorKind::ParityError,
                "3 n_f + 4 n_inf = " + std::to_string(twice_e) + " is odd");
  }
  long e = twice_e / 2;
  return static_cast<int>(2 + e - (n_inf + n_f));
}

}  // namespace equivol
