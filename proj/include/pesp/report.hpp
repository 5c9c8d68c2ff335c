#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/instance.hpp"
#include "pesp/search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pesp {

using Json = nlohmann::ordered_json;

// Fields in fixed order: period, objective, timetable (vertex name -> time in
// [0, T)), tension (arc index -> value), periodic_offset, cycle_offset, basis.
Json solution_json(const PespInstance& inst, const CycleBasis& basis, const Solution& s);

// One JSON object per line: {"z", "objective", "move"} where move is null for
// the start, "reoptimize", or {"arc", "sign"}.
std::string trace_jsonl(const std::vector<TraceRecord>& trace);

struct ReportCaps {
  std::size_t max_width = 10000;
  std::size_t max_trees = kDefaultEnumerationCap;
};

// Zonotope analysis: mu, num_spanning_trees, volume, width, lattice_points,
// box, bound_chain, tiling, validation, duality. Sections that hit a cap are
// omitted and "partial" is set with the error message.
Json analyze_json(const PespInstance& inst, const CycleBasis& basis, VertexId root,
                  const ReportCaps& caps = {});

// Tiles of the fine tiling for `root` with their lattice points.
Json tiling_json(const PespInstance& inst, const CycleBasis& basis, VertexId root,
                 const ReportCaps& caps = {});

// Nonempty polytropes with dimension, tropical vertices, optimum and
// neighbours, plus the neighbourhood graph edges.
Json polytropes_json(const PespInstance& inst, const CycleBasis& basis,
                     const ReportCaps& caps = {});

// Whole JSON text with a trailing newline; byte-stable for equal input.
std::string dump(const Json& j);

}  // namespace pesp
