#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/instance.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pesp {

// Real coordinates are stored multiplied by the period T, so that every
// quantity below is an integer and a point is a lattice point iff T divides
// each scaled coordinate.

// Smallest axis-parallel box containing the cycle offset zonotope.
struct CycleBox {
  std::int64_t period = 1;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  std::size_t dimension() const { return lower.size(); }
  Rational lower_bound(std::size_t k) const { return make_rational(lower[k], period); }
  Rational upper_bound(std::size_t k) const { return make_rational(upper[k], period); }
  // Integer range ceil(lower) .. floor(upper); empty when first > last.
  std::int64_t first(std::size_t k) const { return ceil_div(lower[k], period); }
  std::int64_t last(std::size_t k) const { return floor_div(upper[k], period); }
  std::int64_t count(std::size_t k) const { return std::max<std::int64_t>(0, last(k) - first(k) + 1); }
};

CycleBox cycle_box(const PespInstance& inst, const CycleBasis& basis);

// Number of lattice points of the cycle box; 1 when mu = 0.
BigInt width(const PespInstance& inst, const CycleBasis& basis);
std::vector<std::int64_t> width_factors(const PespInstance& inst, const CycleBasis& basis);

// Lattice points of the box in lexicographic order. Throws
// EnumerationCapExceeded when there are more than `cap`.
std::vector<CycleOffset> box_lattice_points(const CycleBox& box, std::size_t cap);

struct ZonotopeDescriptor {
  CycleBasis basis;
  std::int64_t period = 1;
  // generators[k][a] = Gamma[k][a] * span(a).
  IntMatrix generators;
  // Gamma * lower.
  std::vector<std::int64_t> translation;

  std::size_t dimension() const { return basis.size(); }
  std::vector<std::int64_t> generator(ArcId a) const;
};

// Throws FixedArcPresent for an arc with lower == upper.
ZonotopeDescriptor zonotope_descriptor(const PespInstance& inst, const CycleBasis& basis);

// Some tension x in [lower, upper] has Gamma x = T z.
bool zonotope_membership(const PespInstance& inst, const CycleBasis& basis,
                         const CycleOffset& z);

// Feasible cycle offsets: box lattice points that belong to the zonotope.
std::vector<CycleOffset> lattice_points(const PespInstance& inst, const CycleBasis& basis,
                                        std::size_t cap_width);

// Sum over spanning trees of |det| of the scaled co-tree generator columns.
// Equals 1 when mu = 0. Throws EnumerationCapExceeded past `cap` trees.
Rational volume(const PespInstance& inst, const CycleBasis& basis,
                std::size_t cap = kDefaultEnumerationCap);

// Orients `tree` away from `root`: arcs used along their direction go to the
// upper set, arcs used against it to the lower set.
SpanningTreeStructure structure_for_tree(const Digraph& g, std::span<const ArcId> tree,
                                         VertexId root);

// Parallelotope translation + sum of lambda_k generators_k, lambda in [0,1]^mu.
struct Tile {
  SpanningTreeStructure structure;
  ArcSet cotree;
  // One scaled column per co-tree arc.
  std::vector<std::vector<std::int64_t>> generators;
  // Gamma v with v = upper on the upper set and lower elsewhere.
  std::vector<std::int64_t> translation;
  std::optional<CycleOffset> lattice_point;
};

// Scaled point lies in the closed tile. Singular tiles contain nothing.
bool tile_contains(const Tile& tile, std::span<const std::int64_t> scaled_point);
bool tile_contains(const Tile& tile, const CycleOffset& z, std::int64_t period);

// One tile per spanning tree, in the order of spanning_trees().
std::vector<Tile> fine_tiling(const PespInstance& inst, const CycleBasis& basis,
                              VertexId root, std::size_t cap_width,
                              std::size_t cap_trees = kDefaultEnumerationCap);

struct TilingReport {
  bool nonsingular = true;
  Rational determinant_sum;
  Rational volume;
  bool volume_matches = false;
  bool contained = true;
  bool lattice_covered = true;
  bool at_most_one_point = true;
  // (tile index, lattice point) for every point of every tile.
  std::vector<std::pair<std::size_t, CycleOffset>> incidences;

  bool ok() const {
    return nonsingular && volume_matches && contained && lattice_covered &&
           at_most_one_point;
  }
};

TilingReport validate_tiling(const PespInstance& inst, const CycleBasis& basis,
                             const std::vector<Tile>& tiles, std::size_t cap_width,
                             std::size_t cap_trees = kDefaultEnumerationCap);

struct DualityEntry {
  std::size_t tile = 0;
  CycleOffset z;
  // Timetable fixed by the tile structure, pi_root = 0 at vertex 0.
  Timetable structure_vertex;
  // Tropical vertex of the polytrope at the tiling root, same anchoring.
  Timetable tropical_vertex;
  bool feasible = false;
  bool matches = false;
};

struct DualityReport {
  VertexId root = 0;
  std::vector<DualityEntry> entries;

  bool ok() const;
};

// For every tile holding a lattice point z, the tile structure must pin a
// feasible vertex of the polytrope of z that equals its tropical vertex at
// the tiling root.
DualityReport duality_check(const PespInstance& inst, const CycleBasis& basis,
                            VertexId root, std::size_t cap_width,
                            std::size_t cap_trees = kDefaultEnumerationCap);
DualityReport duality_check(const PespInstance& inst, const CycleBasis& basis,
                            VertexId root, const std::vector<Tile>& tiles);

struct WidthBoundReport {
  std::size_t mu = 0;
  BigInt width;
  std::vector<std::int64_t> width_factors;
  BigInt num_spanning_trees;
  std::int64_t min_span = 0;
  // Per cycle: total span along the cycle divided by T.
  std::vector<Rational> cycle_spans;
  BigInt cycle_length_product;

  Rational tree_bound;        // |trees| (min_span / T)^mu
  Rational volume;
  Rational box_volume;        // product of cycle spans
  Rational rounded_bound;     // W * prod(s / max(floor(s), 1))
  Rational exponential_bound; // W * 2^mu

  bool tree_bound_holds = false;
  bool volume_bound_holds = false;
  bool box_bound_holds = false;
  bool rounded_bound_holds = false;
  // mu = 0 makes the last inequality 1 < 1; it is then not asserted.
  bool strict_bound_vacuous = false;
  bool trees_bound_holds = false;
  // W = 0: the instance is infeasible and this cycle has no integer value.
  std::optional<std::size_t> empty_cycle;

  bool holds() const;
};

WidthBoundReport width_bound_report(const PespInstance& inst, const CycleBasis& basis,
                                    std::size_t cap_trees = kDefaultEnumerationCap);

}  // namespace pesp
