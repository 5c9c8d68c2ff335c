#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/fixed_offset.hpp"
#include "pesp/instance.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pesp {

// A feasible (pi, x, p) with z = Gamma p. The timetable is normalized at
// vertex 0 into [0, T) and p is the offset that timetable induces.
struct Solution {
  Timetable timetable;
  Tension tension;
  OffsetVector offset;
  CycleOffset cycle_offset;
  std::int64_t objective = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// nullopt when pi violates some arc.
std::optional<Solution> solution_from_timetable(const PespInstance& inst,
                                                const CycleBasis& basis,
                                                const Timetable& pi);
Solution solution_from_result(const PespInstance& inst, const CycleBasis& basis,
                              const FixedOffsetResult& result);

// Tension within bounds, reproduced by the timetable, Gamma p = z, objective
// equal to w x.
bool solution_consistent(const PespInstance& inst, const CycleBasis& basis,
                         const Solution& s);

// Random spanning tree with its arcs at tensions drawn from their bounds
// (first attempt: lower bounds), extended along the tree; retried on
// infeasible completions. Throws RetriesExhausted.
Solution initial_solution(const PespInstance& inst, const CycleBasis& basis,
                          std::uint64_t seed, std::size_t max_tries = 1000);

enum class Strategy { BestImprovement, FirstImprovement };

struct TnsConfig {
  Strategy strategy = Strategy::BestImprovement;
  std::size_t max_iterations = 1000;
  std::uint64_t seed = 0;
  // Never revisit a cycle offset.
  bool tabu = true;
  // Accept moves to an equally good, unvisited neighbour.
  bool sideways = false;
};

struct TraceRecord {
  enum class Kind { Start, Reoptimize, Move };
  Kind kind = Kind::Start;
  CycleOffset z;
  std::int64_t objective = 0;
  // For moves: the offset of this arc changed by `sign`.
  ArcId arc = 0;
  int sign = 0;
};

struct TnsResult {
  Solution solution;
  std::vector<TraceRecord> trace;
  std::size_t moves = 0;
  // False when the iteration cap stopped the search.
  bool local_optimum = true;
};

// Local search over neighbouring polytropes: re-optimizes the start region,
// then moves to a neighbour whose optimum is strictly better until none is.
TnsResult tns(const PespInstance& inst, const CycleBasis& basis, const Solution& start,
              const TnsConfig& config = {});

struct NeighbourhoodGraph {
  std::vector<CycleOffset> nodes;
  // Optimum of each node's polytrope.
  std::vector<std::int64_t> optimum;
  // Index pairs (i < j).
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

NeighbourhoodGraph neighbourhood_graph(const PespInstance& inst, const CycleBasis& basis,
                                       std::size_t cap_width);

}  // namespace pesp
