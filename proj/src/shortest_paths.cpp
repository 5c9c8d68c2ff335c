#include "pesp/shortest_paths.hpp"

#include <algorithm>

namespace pesp {

std::optional<std::vector<std::int64_t>> bellman_ford(const WeightedDigraph& g,
                                                      std::size_t source) {
  std::vector<std::int64_t> dist(g.num_vertices, kUnreachable);
  dist[source] = 0;
  for (std::size_t round = 0; round < g.num_vertices; ++round) {
    bool changed = false;
    for (const WeightedArc& e : g.arcs) {
      if (dist[e.from] == kUnreachable) continue;
      if (dist[e.from] + e.weight < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_negative_cycle(const WeightedDigraph& g) {
  const std::size_t n = g.num_vertices;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // Every vertex starts at distance 0, as if joined to a virtual source.
  std::vector<std::int64_t> dist(n, 0);
  std::vector<std::size_t> pred(n, kNone);
  std::size_t last = kNone;
  for (std::size_t round = 0; round <= n; ++round) {
    last = kNone;
    for (std::size_t k = 0; k < g.arcs.size(); ++k) {
      const WeightedArc& e = g.arcs[k];
      if (dist[e.from] + e.weight < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        pred[e.to] = k;
        last = e.to;
      }
    }
    if (last == kNone) return std::nullopt;
  }
  // After n + 1 rounds the predecessor walk from `last` ends on the cycle.
  std::size_t v = last;
  for (std::size_t i = 0; i < n; ++i) v = g.arcs[pred[v]].from;
  std::vector<std::size_t> cycle;
  std::size_t u = v;
  do {
    cycle.push_back(pred[u]);
    u = g.arcs[pred[u]].from;
  } while (u != v);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::optional<std::vector<std::vector<std::int64_t>>> all_pairs_shortest_paths(
    const WeightedDigraph& g) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(g.num_vertices);
  for (std::size_t s = 0; s < g.num_vertices; ++s) {
    auto row = bellman_ford(g, s);
    if (!row) return std::nullopt;
    rows.push_back(std::move(*row));
  }
  return rows;
}

}  // namespace pesp
