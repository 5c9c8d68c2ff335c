#pragma once

#include "pesp/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace pesp {

using VertexId = std::size_t;
using ArcId = std::size_t;
using ArcSet = std::vector<ArcId>;

struct Arc {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed multigraph with stable arc ids. Parallel and antiparallel arcs are
// allowed; self-loops are not. Connectivity is a query, not an invariant, so
// that disconnected inputs can be reported by the operations that need it.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t num_vertices, std::vector<Arc> arcs);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_arcs() const { return arcs_.size(); }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Arcs touching v in either direction, in arc-id order.
  const std::vector<ArcId>& incident(VertexId v) const { return incident_[v]; }

  // Weak connectivity; the empty graph is not connected.
  bool connected() const;

  // n x m, +1 at the tail and -1 at the head of each arc, so that
  // (-B^T pi)_a = pi_head - pi_tail.
  IntMatrix incidence_matrix() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> incident_;
};

// mu = |A| - |V| + 1. Throws DisconnectedGraph.
std::size_t cyclomatic_number(const Digraph& g);

bool is_spanning_tree(const Digraph& g, std::span<const ArcId> arcs);

// Breadth-first tree from `root`, scanning incident arcs in id order.
ArcSet bfs_spanning_tree(const Digraph& g, VertexId root = 0);

// Uniformly shuffled Kruskal; not uniform over trees but covers all of them.
ArcSet random_spanning_tree(const Digraph& g, std::mt19937_64& rng);

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

// Every spanning tree of the underlying multigraph, each as a sorted arc set.
// Parallel arcs produce distinct trees.
std::vector<ArcSet> spanning_trees(const Digraph& g,
                                   std::size_t cap = kDefaultEnumerationCap);

// Matrix-Tree theorem on the reduced Laplacian of the underlying multigraph.
BigInt count_spanning_trees_determinant(const Digraph& g);

enum class Direction { Forward, Reverse };

struct ArcOrigin {
  ArcId arc;
  Direction direction;
  friend bool operator==(const ArcOrigin&, const ArcOrigin&) = default;
};

// The doubled graph: arc 2a is the forward copy of arc a, arc 2a+1 its
// reverse copy.
struct DoubledDigraph {
  Digraph graph;
  std::vector<ArcOrigin> origin;
};

DoubledDigraph gbar(const Digraph& g);

// All spanning arborescences directed away from `root`, as sorted arc sets.
std::vector<ArcSet> arborescences_rooted(
    const Digraph& g, VertexId root, std::size_t cap = kDefaultEnumerationCap);

}  // namespace pesp
