#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/instance.hpp"

#include <random>
#include <string>

namespace pesp::testing {

// Triangle v0, v1, v2 with arcs 01, 02, 12 and period 10.
inline PespInstance running_triangle() {
  return parse_instance(
      "PERIOD 10\n"
      "ARC v0 v1 3 12 1\n"
      "ARC v0 v2 2 10 1\n"
      "ARC v1 v2 4 13 1\n");
}

// Square v0..v3 with antiparallel pairs between v0,v1 and v2,v3.
inline PespInstance antiparallel_square() {
  return parse_instance(
      "PERIOD 10\n"
      "ARC v0 v1 6 15 1\n"
      "ARC v1 v0 3 12 1\n"
      "ARC v1 v2 3 12 1\n"
      "ARC v3 v0 3 12 1\n"
      "ARC v3 v2 3 12 1\n"
      "ARC v2 v3 4 13 1\n");
}

// Tree {10, 12, 32}: two 2-cycles and the square.
inline const ArcSet kSquareFaceTree = {1, 2, 4};

inline CycleBasis auto_basis(const PespInstance& inst) {
  return fundamental_cycle_basis(inst.graph, bfs_spanning_tree(inst.graph));
}

struct RandomInstanceSpec {
  std::size_t max_vertices = 5;
  std::size_t max_arcs = 8;
  std::int64_t max_period = 12;
  std::int64_t min_span = 1;
  std::int64_t max_weight = 5;
};

// Connected instance: random tree plus extra arcs, spans in [min_span, T-1].
inline PespInstance random_instance(std::mt19937_64& rng, const RandomInstanceSpec& spec = {}) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto n = static_cast<std::size_t>(pick(2, static_cast<std::int64_t>(spec.max_vertices)));
  const std::size_t m = static_cast<std::size_t>(
      pick(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(spec.max_arcs)));
  const std::int64_t t = pick(spec.min_span + 1, spec.max_period);
  std::string text = "PERIOD " + std::to_string(t) + "\n";
  for (std::size_t v = 0; v < n; ++v) text += "EVENT v" + std::to_string(v) + "\n";
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t i;
    std::size_t j;
    if (a + 1 < n) {
      i = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(a)));
      j = a + 1;
      if (pick(0, 1)) std::swap(i, j);
    } else {
      do {
        i = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(n - 1)));
        j = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(n - 1)));
      } while (i == j);
    }
    const std::int64_t lo = pick(0, t - 1);
    const std::int64_t span = pick(spec.min_span, t - 1);
    text += "ARC v" + std::to_string(i) + " v" + std::to_string(j) + " " +
            std::to_string(lo) + " " + std::to_string(lo + span) + " " +
            std::to_string(pick(0, spec.max_weight)) + "\n";
  }
  return parse_instance(text);
}

}  // namespace pesp::testing
