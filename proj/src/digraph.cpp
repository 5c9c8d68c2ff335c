#include "pesp/digraph.hpp"

#include "pesp/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pesp {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    --components_;
    return true;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

}  // namespace

Digraph::Digraph(std::size_t num_vertices, std::vector<Arc> arcs)
    : num_vertices_(num_vertices), arcs_(std::move(arcs)),
      incident_(num_vertices) {
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail >= num_vertices_ || arc.head >= num_vertices_) {
      throw std::invalid_argument("arc " + std::to_string(a) +
                                  " has an undeclared endpoint");
    }
    if (arc.tail == arc.head) {
      throw std::invalid_argument("arc " + std::to_string(a) +
                                  " is a self-loop");
    }
    incident_[arc.tail].push_back(a);
    incident_[arc.head].push_back(a);
  }
}

bool Digraph::connected() const {
  if (num_vertices_ == 0) return false;
  DisjointSets sets(num_vertices_);
  for (const Arc& arc : arcs_) sets.unite(arc.tail, arc.head);
  return sets.components() == 1;
}

IntMatrix Digraph::incidence_matrix() const {
  IntMatrix b(num_vertices_, std::vector<std::int64_t>(arcs_.size(), 0));
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    b[arcs_[a].tail][a] += 1;
    b[arcs_[a].head][a] -= 1;
  }
  return b;
}

std::size_t cyclomatic_number(const Digraph& g) {
  if (!g.connected()) throw DisconnectedGraph();
  return g.num_arcs() + 1 - g.num_vertices();
}

bool is_spanning_tree(const Digraph& g, std::span<const ArcId> arcs) {
  if (g.num_vertices() == 0) return false;
  if (arcs.size() + 1 != g.num_vertices()) return false;
  DisjointSets sets(g.num_vertices());
  std::vector<bool> seen(g.num_arcs(), false);
  for (ArcId a : arcs) {
    if (a >= g.num_arcs() || seen[a]) return false;
    seen[a] = true;
    if (!sets.unite(g.arc(a).tail, g.arc(a).head)) return false;
  }
  return sets.components() == 1;
}

ArcSet bfs_spanning_tree(const Digraph& g, VertexId root) {
  if (!g.connected()) throw DisconnectedGraph();
  std::vector<bool> visited(g.num_vertices(), false);
  std::deque<VertexId> queue{root};
  visited[root] = true;
  ArcSet tree;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (ArcId a : g.incident(v)) {
      VertexId w = g.arc(a).tail == v ? g.arc(a).head : g.arc(a).tail;
      if (visited[w]) continue;
      visited[w] = true;
      tree.push_back(a);
      queue.push_back(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

ArcSet random_spanning_tree(const Digraph& g, std::mt19937_64& rng) {
  if (!g.connected()) throw DisconnectedGraph();
  std::vector<ArcId> order(g.num_arcs());
  std::iota(order.begin(), order.end(), ArcId{0});
  std::shuffle(order.begin(), order.end(), rng);
  DisjointSets sets(g.num_vertices());
  ArcSet tree;
  for (ArcId a : order) {
    if (sets.unite(g.arc(a).tail, g.arc(a).head)) tree.push_back(a);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<ArcSet> spanning_trees(const Digraph& g, std::size_t cap) {
  if (!g.connected()) throw DisconnectedGraph();
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_arcs();
  std::vector<ArcSet> trees;
  ArcSet chosen;

  // Include/exclude recursion over arcs in id order. An arc is included only
  // when it joins two components, and excluded only when the remaining arcs
  // can still complete a spanning tree, so every leaf is a distinct tree.
  std::function<void(std::size_t, const DisjointSets&)> recurse =
      [&](std::size_t idx, const DisjointSets& sets) {
        if (chosen.size() + 1 == n) {
          if (trees.size() == cap) {
            throw EnumerationCapExceeded("spanning tree enumeration", cap);
          }
          trees.push_back(chosen);
          return;
        }
        if (idx == m || chosen.size() + (m - idx) + 1 < n) return;
        const Arc& arc = g.arc(idx);
        {
          DisjointSets with = sets;
          if (with.unite(arc.tail, arc.head)) {
            chosen.push_back(idx);
            recurse(idx + 1, with);
            chosen.pop_back();
          }
        }
        DisjointSets rest = sets;
        for (std::size_t b = idx + 1; b < m; ++b) {
          rest.unite(g.arc(b).tail, g.arc(b).head);
        }
        if (rest.components() == 1) recurse(idx + 1, sets);
      };
  recurse(0, DisjointSets(n));
  return trees;
}

BigInt count_spanning_trees_determinant(const Digraph& g) {
  if (!g.connected()) return 0;
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<BigInt>> laplacian(
      n - 1, std::vector<BigInt>(n - 1, 0));
  for (const Arc& arc : g.arcs()) {
    // Row/column of vertex 0 is deleted.
    const auto t = static_cast<std::ptrdiff_t>(arc.tail) - 1;
    const auto h = static_cast<std::ptrdiff_t>(arc.head) - 1;
    if (t >= 0) laplacian[t][t] += 1;
    if (h >= 0) laplacian[h][h] += 1;
    if (t >= 0 && h >= 0) {
      laplacian[t][h] -= 1;
      laplacian[h][t] -= 1;
    }
  }
  return determinant(laplacian);
}

DoubledDigraph gbar(const Digraph& g) {
  std::vector<Arc> arcs;
  std::vector<ArcOrigin> origin;
  arcs.reserve(2 * g.num_arcs());
  origin.reserve(2 * g.num_arcs());
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    arcs.push_back(g.arc(a));
    origin.push_back({a, Direction::Forward});
    arcs.push_back({g.arc(a).head, g.arc(a).tail});
    origin.push_back({a, Direction::Reverse});
  }
  return {Digraph(g.num_vertices(), std::move(arcs)), std::move(origin)};
}

std::vector<ArcSet> arborescences_rooted(const Digraph& g, VertexId root,
                                         std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<ArcId>> incoming(n);
  for (ArcId a = 0; a < g.num_arcs(); ++a) incoming[g.arc(a).head].push_back(a);

  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v) {
    if (v != root) others.push_back(v);
  }

  // Every non-root vertex picks one incoming arc; a pick is rejected when the
  // parent chain of its tail already runs through the vertex itself.
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> parent(n, kNone);
  std::vector<ArcSet> result;
  ArcSet chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t k) {
    if (k == others.size()) {
      if (result.size() == cap) {
        throw EnumerationCapExceeded("arborescence enumeration", cap);
      }
      ArcSet sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      result.push_back(std::move(sorted));
      return;
    }
    const VertexId v = others[k];
    for (ArcId a : incoming[v]) {
      VertexId u = g.arc(a).tail;
      bool cycle = false;
      while (u != kNone) {
        if (u == v) {
          cycle = true;
          break;
        }
        u = parent[u];
      }
      if (cycle) continue;
      parent[v] = g.arc(a).tail;
      chosen.push_back(a);
      recurse(k + 1);
      chosen.pop_back();
      parent[v] = kNone;
    }
  };
  recurse(0);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace pesp
