#pragma once

#include "pesp/digraph.hpp"
#include "pesp/vectors.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pesp {

// (G, T, lower, upper, weight). All data is integral.
struct PespInstance {
  Digraph graph;
  std::vector<std::string> vertex_names;
  std::int64_t period = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> weight;
  // Set on derived limit instances, whose arcs deliberately span T.
  bool relaxed = false;

  std::size_t num_vertices() const { return graph.num_vertices(); }
  std::size_t num_arcs() const { return graph.num_arcs(); }
  std::int64_t span(ArcId a) const { return upper[a] - lower[a]; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::string vertex_name(VertexId v) const;
};

// Arc subsets pinned to their lower (L) or upper (U) bound, S = L u U.
struct SpanningTreeStructure {
  ArcSet tree;
  ArcSet lower;
  ArcSet upper;
  friend bool operator==(const SpanningTreeStructure&,
                         const SpanningTreeStructure&) = default;
};

struct Violation {
  std::optional<ArcId> arc;
  std::string message;
};
using ValidationReport = std::vector<Violation>;

// Every violated admissibility condition; empty iff the instance is usable.
ValidationReport validate(const PespInstance& inst);

// Native line format:
//   # comment
//   PERIOD <T>
//   EVENT <id>
//   ARC <tail> <head> <lower> <upper> <weight>
// Throws ParseError, InvalidBounds or DisconnectedGraph.
PespInstance parse_instance(std::istream& in);
PespInstance parse_instance(const std::string& text);
PespInstance read_instance_file(const std::string& path);

// Canonical form: PERIOD, one EVENT per vertex, one ARC per arc, in id order.
void write_instance(std::ostream& out, const PespInstance& inst);
std::string to_text(const PespInstance& inst);

struct Contraction {
  PespInstance instance;
  // Original vertex -> contracted vertex.
  std::vector<VertexId> vertex_map;
  // pi_v = pi'_{vertex_map[v]} + vertex_shift[v] for every original vertex.
  std::vector<std::int64_t> vertex_shift;
  // Original arc -> surviving arc, or nullopt when contracted or eliminated.
  std::vector<std::optional<ArcId>> arc_map;
  // Objective of the original = objective of the contracted + this constant.
  std::int64_t objective_offset = 0;
};

// Merges the endpoints of every arc with lower == upper. Arcs that end up
// inside one merged class are loops; consistent loops are eliminated with a
// constant contribution, inconsistent ones throw InfeasibleFixedCycle.
Contraction contract_fixed_arcs(const PespInstance& inst);

// (G, T, lower, lower + T, weight), flagged as relaxed.
PespInstance limit_instance(const PespInstance& inst);

}  // namespace pesp
