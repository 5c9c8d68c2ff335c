#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/instance.hpp"

#include <optional>
#include <vector>

namespace pesp {

struct FixedOffsetResult {
  // Anchored at vertex 0; lies in the region of `offset`.
  Timetable timetable;
  Tension tension;
  OffsetVector offset;
  std::int64_t objective = 0;
  // Spanning tree of arcs at a bound that pins `timetable`; empty for results
  // of the brute force search.
  SpanningTreeStructure tight_structure;
};

// Minimizes sum_a weight_a * x_a over the timetables of the region with
// offset p. nullopt iff that region is empty. Among optimal timetables with
// pi_0 = 0 the componentwise smallest one is returned; it is a vertex.
std::optional<FixedOffsetResult> minimize_over_polytrope(
    const PespInstance& inst, const OffsetVector& p,
    const std::vector<std::int64_t>& weights);

// Same, with the instance weights.
std::optional<FixedOffsetResult> minimize_over_polytrope(const PespInstance& inst,
                                                         const OffsetVector& p);

// x with x = lower on the lower set and upper on the upper set of the tree,
// extended through the timetable the tree pins.
Tension tension_from_structure(const PespInstance& inst, const SpanningTreeStructure& s,
                               const OffsetVector& p);

struct GridCaps {
  std::size_t max_vertices = 5;
  std::int64_t max_period = 30;
};

// Throws EnumerationCapExceeded when the instance is larger than `caps`.
void check_grid_caps(const PespInstance& inst, const GridCaps& caps);

// Scans pi in {0..T-1}^(V - vertex 0) with pi_0 = 0 and keeps the timetables
// whose tension has cycle offset Gamma p. Independent of the flow solver.
std::optional<FixedOffsetResult> brute_force_fixed_offset(
    const PespInstance& inst, const CycleBasis& basis, const OffsetVector& p,
    const std::vector<std::int64_t>& weights, const GridCaps& caps = {});

}  // namespace pesp
