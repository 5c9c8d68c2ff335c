#pragma once

#include "pesp/digraph.hpp"
#include "pesp/vectors.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pesp {

// Signed arc incidence of a circuit: +1 traversed forward, -1 backward.
struct OrientedCycle {
  std::vector<int> signature;

  std::size_t length() const;
  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;
};

// Ordered integral cycle basis with its cycle matrix Gamma (rows = cycles).
// A fundamental basis also remembers its spanning tree and, per cycle, the
// co-tree arc that generated it.
class CycleBasis {
 public:
  CycleBasis() = default;
  CycleBasis(std::size_t num_arcs, std::vector<OrientedCycle> cycles);
  CycleBasis(std::size_t num_arcs, std::vector<OrientedCycle> cycles,
             ArcSet tree, ArcSet cotree);

  std::size_t size() const { return cycles_.size(); }
  std::size_t num_arcs() const { return num_arcs_; }
  const std::vector<OrientedCycle>& cycles() const { return cycles_; }
  const IntMatrix& gamma() const { return gamma_; }
  std::vector<std::int64_t> column(ArcId a) const;

  bool fundamental() const { return tree_.has_value(); }
  const std::optional<ArcSet>& tree() const { return tree_; }
  // Co-tree arc of each cycle, in cycle order (fundamental bases only).
  const ArcSet& cotree() const { return cotree_; }

  // Gamma * v for any arc-indexed integer vector.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  CycleOffset cycle_offset(const OffsetVector& p) const;

 private:
  std::size_t num_arcs_ = 0;
  std::vector<OrientedCycle> cycles_;
  IntMatrix gamma_;
  std::optional<ArcSet> tree_;
  ArcSet cotree_;
};

// Fundamental cycles of `tree`, one per co-tree arc in increasing arc order.
// Each cycle carries +1 on its co-tree arc. Throws NotASpanningTree.
CycleBasis fundamental_cycle_basis(const Digraph& g, std::span<const ArcId> tree);

// Gamma * B^T = 0 and rank(Gamma) = mu.
bool verify_kernel_property(const CycleBasis& basis, const Digraph& g);

// Integer p with Gamma p = z. Fundamental bases place z on the co-tree arcs
// and zero on tree arcs; other bases are inverted on the co-tree columns of a
// BFS tree, which form a unimodular block for any integral basis.
OffsetVector offset_from_cycle_offset(const CycleBasis& basis, const Digraph& g,
                                      const CycleOffset& z);

}  // namespace pesp
