#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/instance.hpp"
#include "pesp/shortest_paths.hpp"

#include <optional>
#include <set>
#include <vector>

namespace pesp {

// Weights of the doubled graph for offset p: the forward copy of arc a gets
// upper - T p, the reverse copy T p - lower. Arc 2a / 2a+1 as in gbar().
WeightedDigraph kappa(const PespInstance& inst, const OffsetVector& p);

// The region of timetables whose tension uses offset p is nonempty.
bool polytrope_nonempty(const PespInstance& inst, const OffsetVector& p);

struct Polytrope {
  OffsetVector offset;
  CycleOffset cycle_offset;
  // All-pairs shortest paths under kappa(p); nullopt when empty.
  std::optional<IntMatrix> dist;
  int dimension = -1;

  bool empty() const { return !dist.has_value(); }
};

Polytrope polytrope_build(const PespInstance& inst, const CycleBasis& basis,
                          const OffsetVector& p);
Polytrope polytrope_for_cycle_offset(const PespInstance& inst,
                                     const CycleBasis& basis, const CycleOffset& z);

// -1 when empty, otherwise (components of the zero-cycle equality graph) - 1.
int polytrope_dimension(const Polytrope& poly);

// Vertex i has coordinates dist(i, .), shifted so that its `root` entry is 0.
// Throws EmptyPolytrope.
std::vector<Timetable> tropical_vertices(const Polytrope& poly, VertexId root = 0);

bool timetable_membership(const PespInstance& inst, const OffsetVector& p,
                          const Timetable& pi);

// Per arc the smallest offset with lower <= pi_head - pi_tail + T p; arcs whose
// resulting tension exceeds the upper bound are listed in `violated`.
struct TensionAssignment {
  Tension tension;
  OffsetVector offset;
  ArcSet violated;

  bool feasible() const { return violated.empty(); }
};

TensionAssignment timetable_to_tension(const PespInstance& inst, const Timetable& pi);

// Depth-first from `root`, pi_head = pi_tail + x mod T. Throws NotATension
// when x leaves its bounds or is not a periodic tension.
Timetable tension_to_timetable(const PespInstance& inst, const Tension& x,
                               VertexId root = 0);

// Timetable with pi_anchor = 0 whose tree arcs sit at the bound the structure
// selects, for offset p. Tree arcs not in lower or upper count as lower.
Timetable timetable_from_structure(const PespInstance& inst,
                                   const SpanningTreeStructure& s,
                                   const OffsetVector& p, VertexId anchor = 0);

// z +- (column of Gamma) for every arc, kept when nonempty.
std::set<CycleOffset> neighbors(const PespInstance& inst, const CycleBasis& basis,
                                const CycleOffset& z);

// Nonempty polytropes, one per lattice point of the cycle box that is
// feasible, in lexicographic order of z. Throws EnumerationCapExceeded when the
// box holds more than `cap_width` lattice points.
std::vector<Polytrope> enumerate_polytropes(const PespInstance& inst,
                                            const CycleBasis& basis,
                                            std::size_t cap_width);

// pi_root = 0 and every entry reduced into [0, T).
Timetable normalize_timetable(const Timetable& pi, VertexId root, std::int64_t period);

// pi_root = 0 by a constant shift only.
Timetable anchor_timetable(const Timetable& pi, VertexId root);

// Compares the Gamma-column neighbour test with the facet test on the limit
// instance, where z and z' are adjacent iff the two limit regions for offsets
// p and p +- e_a meet in a set of codimension one.
struct NeighbourDiagnostic {
  CycleOffset z;
  std::set<CycleOffset> column_test;
  std::set<CycleOffset> facet_test;

  bool diverges() const { return column_test != facet_test; }
};

NeighbourDiagnostic neighbour_diagnostic(const PespInstance& inst,
                                         const CycleBasis& basis,
                                         const CycleOffset& z);

}  // namespace pesp
