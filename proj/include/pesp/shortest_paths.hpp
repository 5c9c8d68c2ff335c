#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace pesp {

struct WeightedArc {
  std::size_t from;
  std::size_t to;
  std::int64_t weight;
};

struct WeightedDigraph {
  std::size_t num_vertices = 0;
  std::vector<WeightedArc> arcs;
};

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

// Single-source shortest paths by Bellman-Ford. Unreachable vertices get
// kUnreachable; nullopt when a negative cycle is reachable from `source`.
std::optional<std::vector<std::int64_t>> bellman_ford(const WeightedDigraph& g,
                                                      std::size_t source);

// Arc indices of some negative cycle in walk order, or nullopt if none exists.
std::optional<std::vector<std::size_t>> find_negative_cycle(const WeightedDigraph& g);

// Row i holds the distances from vertex i; nullopt on a negative cycle.
std::optional<std::vector<std::vector<std::int64_t>>> all_pairs_shortest_paths(
    const WeightedDigraph& g);

}  // namespace pesp
