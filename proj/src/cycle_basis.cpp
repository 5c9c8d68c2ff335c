#include "pesp/cycle_basis.hpp"

#include "pesp/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace pesp {

std::size_t OrientedCycle::length() const {
  return static_cast<std::size_t>(
      std::count_if(signature.begin(), signature.end(),
                    [](int s) { return s != 0; }));
}

CycleBasis::CycleBasis(std::size_t num_arcs, std::vector<OrientedCycle> cycles)
    : num_arcs_(num_arcs), cycles_(std::move(cycles)) {
  for (const auto& c : cycles_) {
    if (c.signature.size() != num_arcs_) {
      throw std::invalid_argument("cycle signature has wrong length");
    }
    gamma_.emplace_back(c.signature.begin(), c.signature.end());
  }
}

CycleBasis::CycleBasis(std::size_t num_arcs, std::vector<OrientedCycle> cycles,
                       ArcSet tree, ArcSet cotree)
    : CycleBasis(num_arcs, std::move(cycles)) {
  if (cotree.size() != cycles_.size()) {
    throw std::invalid_argument("one co-tree arc per cycle required");
  }
  tree_ = std::move(tree);
  cotree_ = std::move(cotree);
}

std::vector<std::int64_t> CycleBasis::column(ArcId a) const {
  std::vector<std::int64_t> col(cycles_.size());
  for (std::size_t k = 0; k < cycles_.size(); ++k) col[k] = gamma_[k][a];
  return col;
}

std::vector<std::int64_t> CycleBasis::apply(
    std::span<const std::int64_t> v) const {
  std::vector<std::int64_t> out(cycles_.size(), 0);
  for (std::size_t k = 0; k < cycles_.size(); ++k) {
    for (ArcId a = 0; a < num_arcs_; ++a) out[k] += gamma_[k][a] * v[a];
  }
  return out;
}

CycleOffset CycleBasis::cycle_offset(const OffsetVector& p) const {
  return CycleOffset(apply(p.values()));
}

CycleBasis fundamental_cycle_basis(const Digraph& g,
                                   std::span<const ArcId> tree) {
  if (!is_spanning_tree(g, tree)) {
    throw NotASpanningTree("expected " + std::to_string(g.num_vertices() - 1) +
                           " acyclic arcs covering every vertex");
  }
  const std::size_t n = g.num_vertices();
  std::vector<bool> in_tree(g.num_arcs(), false);
  for (ArcId a : tree) in_tree[a] = true;

  // Root the tree at vertex 0: parent arc and depth per vertex.
  constexpr ArcId kNone = static_cast<ArcId>(-1);
  std::vector<ArcId> parent_arc(n, kNone);
  std::vector<VertexId> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.incident(v)) {
      if (!in_tree[a]) continue;
      VertexId w = g.arc(a).tail == v ? g.arc(a).head : g.arc(a).tail;
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      parent_arc[w] = a;
      depth[w] = depth[v] + 1;
      stack.push_back(w);
    }
  }

  std::vector<OrientedCycle> cycles;
  ArcSet cotree;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (in_tree[a]) continue;
    std::vector<int> sig(g.num_arcs(), 0);
    sig[a] = 1;
    // Close the cycle by walking from head(a) back to tail(a) in the tree.
    // Walking up from x to parent(x) along arc e is forward iff e = (x, parent).
    VertexId x = g.arc(a).head;
    VertexId y = g.arc(a).tail;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        ArcId e = parent_arc[x];
        sig[e] += g.arc(e).tail == x ? 1 : -1;
        x = parent[x];
      } else {
        ArcId e = parent_arc[y];
        // Traversed from parent(y) down to y.
        sig[e] += g.arc(e).head == y ? 1 : -1;
        y = parent[y];
      }
    }
    cycles.push_back({std::move(sig)});
    cotree.push_back(a);
  }
  ArcSet sorted_tree(tree.begin(), tree.end());
  std::sort(sorted_tree.begin(), sorted_tree.end());
  return CycleBasis(g.num_arcs(), std::move(cycles), std::move(sorted_tree),
                    std::move(cotree));
}

bool verify_kernel_property(const CycleBasis& basis, const Digraph& g) {
  if (basis.num_arcs() != g.num_arcs()) return false;
  if (!g.connected()) return false;
  const std::size_t mu = g.num_arcs() + 1 - g.num_vertices();
  if (basis.size() != mu) return false;
  const IntMatrix b = g.incidence_matrix();
  for (const auto& row : basis.gamma()) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::int64_t s = 0;
      for (ArcId a = 0; a < g.num_arcs(); ++a) s += row[a] * b[v][a];
      if (s != 0) return false;
    }
  }
  return rank(basis.gamma()) == mu;
}

OffsetVector offset_from_cycle_offset(const CycleBasis& basis, const Digraph& g,
                                      const CycleOffset& z) {
  if (z.size() != basis.size()) {
    throw std::invalid_argument("cycle offset has wrong dimension");
  }
  OffsetVector p(basis.num_arcs(), 0);
  if (basis.fundamental()) {
    for (std::size_t k = 0; k < basis.size(); ++k) p[basis.cotree()[k]] = z[k];
    return p;
  }
  // Solve Gamma_N y = z on the co-tree columns N of some spanning tree.
  const ArcSet tree = bfs_spanning_tree(g);
  std::vector<bool> in_tree(g.num_arcs(), false);
  for (ArcId a : tree) in_tree[a] = true;
  ArcSet cotree;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (!in_tree[a]) cotree.push_back(a);
  }
  const std::size_t mu = basis.size();
  RationalMatrix block(mu, std::vector<Rational>(mu));
  std::vector<Rational> rhs(mu);
  for (std::size_t k = 0; k < mu; ++k) {
    for (std::size_t j = 0; j < mu; ++j) block[k][j] = basis.gamma()[k][cotree[j]];
    rhs[k] = z[k];
  }
  auto y = solve_square(std::move(block), std::move(rhs));
  if (!y) throw NonIntegralBasis();
  for (std::size_t j = 0; j < mu; ++j) {
    if (boost::multiprecision::denominator((*y)[j]) != 1) throw NonIntegralBasis();
    p[cotree[j]] =
        static_cast<std::int64_t>(boost::multiprecision::numerator((*y)[j]));
  }
  return p;
}

}  // namespace pesp
