#pragma once

// Helpers shared by the test binaries: small surfaces and random closed walks.

#include <queue>
#include <random>

#include "mcgen/ribbon_graph.hpp"

namespace mcgen::testing {

// One vertex, edges a = (0,1) and b = (2,3), rotation (0 2 1 3): the square torus.
inline RibbonGraph square_torus() {
  return RibbonGraph({1, 0, 3, 2}, {2, 3, 1, 0}, {{0, "a+"}, {1, "a-"}, {2, "b+"}, {3, "b-"}});
}

// One edge joining two vertices.
inline RibbonGraph segment_sphere() { return RibbonGraph({1, 0}, {0, 1}); }

// Closed walk: random steps from a random dart, then the shortest way home.
// Backtracking is cancelled; may return an empty cycle.
inline Cycle random_cycle(const RibbonGraph& rg, std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<Dart> pick(0, static_cast<Dart>(rg.dart_count() - 1));
  const Dart start = pick(rng);
  Cycle c{{start}, "walk"};
  for (int i = 0; i < steps; ++i) {
    const auto& around = rg.vertices()[rg.vertex_of(rg.pair(c.darts.back()))];
    std::uniform_int_distribution<std::size_t> k(0, around.size() - 1);
    c.darts.push_back(around[k(rng)]);
  }
  // BFS over vertices back to the start vertex.
  const std::size_t home = rg.vertex_of(start);
  const std::size_t here = rg.vertex_of(rg.pair(c.darts.back()));
  std::vector<long> via(rg.vertex_count(), -1);
  std::vector<bool> seen(rg.vertex_count(), false);
  std::queue<std::size_t> q;
  q.push(here);
  seen[here] = true;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (Dart d : rg.vertices()[v]) {
      const std::size_t w = rg.vertex_of(rg.pair(d));
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = d;
      q.push(w);
    }
  }
  std::vector<Dart> path;
  for (std::size_t v = home; v != here; v = rg.vertex_of(static_cast<Dart>(via[v])))
    path.push_back(static_cast<Dart>(via[v]));
  c.darts.insert(c.darts.end(), path.rbegin(), path.rend());
  return cyclically_reduced(rg, c);
}

}  // namespace mcgen::testing
