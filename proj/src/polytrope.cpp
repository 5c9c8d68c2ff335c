#include "pesp/polytrope.hpp"

#include "pesp/errors.hpp"
#include "pesp/zonotope.hpp"

#include <numeric>

namespace pesp {

WeightedDigraph kappa(const PespInstance& inst, const OffsetVector& p) {
  WeightedDigraph g;
  g.num_vertices = inst.num_vertices();
  g.arcs.reserve(2 * inst.num_arcs());
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    const std::int64_t shift = inst.period * p[a];
    g.arcs.push_back({arc.tail, arc.head, inst.upper[a] - shift});
    g.arcs.push_back({arc.head, arc.tail, shift - inst.lower[a]});
  }
  return g;
}

bool polytrope_nonempty(const PespInstance& inst, const OffsetVector& p) {
  return !find_negative_cycle(kappa(inst, p)).has_value();
}

namespace {

int dimension_from_dist(const IntMatrix& dist) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> component(n);
  std::iota(component.begin(), component.end(), std::size_t{0});
  std::size_t count = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] + dist[j][i] != 0) continue;
      const std::size_t from = component[j];
      const std::size_t to = component[i];
      if (from == to) continue;
      for (auto& c : component) {
        if (c == from) c = to;
      }
      --count;
    }
  }
  return static_cast<int>(count) - 1;
}

}  // namespace

Polytrope polytrope_build(const PespInstance& inst, const CycleBasis& basis,
                          const OffsetVector& p) {
  Polytrope poly;
  poly.offset = p;
  poly.cycle_offset = basis.cycle_offset(p);
  const WeightedDigraph g = kappa(inst, p);
  if (!find_negative_cycle(g)) poly.dist = all_pairs_shortest_paths(g);
  poly.dimension = polytrope_dimension(poly);
  return poly;
}

Polytrope polytrope_for_cycle_offset(const PespInstance& inst,
                                     const CycleBasis& basis, const CycleOffset& z) {
  return polytrope_build(inst, basis, offset_from_cycle_offset(basis, inst.graph, z));
}

int polytrope_dimension(const Polytrope& poly) {
  if (poly.empty()) return -1;
  return dimension_from_dist(*poly.dist);
}

std::vector<Timetable> tropical_vertices(const Polytrope& poly, VertexId root) {
  if (poly.empty()) throw EmptyPolytrope();
  std::vector<Timetable> out;
  for (const auto& row : *poly.dist) out.push_back(anchor_timetable(Timetable(row), root));
  return out;
}

bool timetable_membership(const PespInstance& inst, const OffsetVector& p,
                          const Timetable& pi) {
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    const std::int64_t x = pi[arc.head] - pi[arc.tail] + inst.period * p[a];
    if (x < inst.lower[a] || x > inst.upper[a]) return false;
  }
  return true;
}

TensionAssignment timetable_to_tension(const PespInstance& inst, const Timetable& pi) {
  TensionAssignment out;
  out.tension = Tension(inst.num_arcs());
  out.offset = OffsetVector(inst.num_arcs());
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    const std::int64_t diff = pi[arc.head] - pi[arc.tail];
    const std::int64_t p = ceil_div(inst.lower[a] - diff, inst.period);
    out.offset[a] = p;
    out.tension[a] = diff + inst.period * p;
    if (out.tension[a] > inst.upper[a]) out.violated.push_back(a);
  }
  return out;
}

Timetable tension_to_timetable(const PespInstance& inst, const Tension& x,
                               VertexId root) {
  const std::int64_t t = inst.period;
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    if (x[a] < inst.lower[a] || x[a] > inst.upper[a]) throw NotATension(a);
  }
  Timetable pi(inst.num_vertices());
  std::vector<bool> seen(inst.num_vertices(), false);
  std::vector<VertexId> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : inst.graph.incident(v)) {
      const Arc& arc = inst.graph.arc(a);
      VertexId w = arc.tail == v ? arc.head : arc.tail;
      if (seen[w]) continue;
      seen[w] = true;
      pi[w] = mod_floor(arc.tail == v ? pi[v] + x[a] : pi[v] - x[a], t);
      stack.push_back(w);
    }
  }
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    if (mod_floor(pi[arc.head] - pi[arc.tail] - x[a], t) != 0) throw NotATension(a);
  }
  return pi;
}

Timetable timetable_from_structure(const PespInstance& inst,
                                   const SpanningTreeStructure& s,
                                   const OffsetVector& p, VertexId anchor) {
  std::vector<bool> upper(inst.num_arcs(), false);
  std::vector<bool> in_tree(inst.num_arcs(), false);
  for (ArcId a : s.upper) upper[a] = true;
  for (ArcId a : s.tree) in_tree[a] = true;
  if (!is_spanning_tree(inst.graph, s.tree)) {
    throw NotASpanningTree("structure tree does not span");
  }
  Timetable pi(inst.num_vertices());
  std::vector<bool> seen(inst.num_vertices(), false);
  std::vector<VertexId> stack{anchor};
  seen[anchor] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : inst.graph.incident(v)) {
      if (!in_tree[a]) continue;
      const Arc& arc = inst.graph.arc(a);
      VertexId w = arc.tail == v ? arc.head : arc.tail;
      if (seen[w]) continue;
      seen[w] = true;
      const std::int64_t diff =
          (upper[a] ? inst.upper[a] : inst.lower[a]) - inst.period * p[a];
      pi[w] = arc.tail == v ? pi[v] + diff : pi[v] - diff;
      stack.push_back(w);
    }
  }
  return pi;
}

std::set<CycleOffset> neighbors(const PespInstance& inst, const CycleBasis& basis,
                                const CycleOffset& z) {
  std::set<CycleOffset> out;
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const auto col = basis.column(a);
    if (std::all_of(col.begin(), col.end(), [](std::int64_t c) { return c == 0; })) {
      continue;
    }
    for (int sign : {1, -1}) {
      CycleOffset next = z;
      for (std::size_t k = 0; k < col.size(); ++k) next[k] += sign * col[k];
      if (out.count(next)) continue;
      if (polytrope_nonempty(inst, offset_from_cycle_offset(basis, inst.graph, next))) {
        out.insert(next);
      }
    }
  }
  return out;
}

std::vector<Polytrope> enumerate_polytropes(const PespInstance& inst,
                                            const CycleBasis& basis,
                                            std::size_t cap_width) {
  std::vector<Polytrope> out;
  for (const CycleOffset& z : box_lattice_points(cycle_box(inst, basis), cap_width)) {
    Polytrope poly = polytrope_for_cycle_offset(inst, basis, z);
    if (!poly.empty()) out.push_back(std::move(poly));
  }
  return out;
}

Timetable normalize_timetable(const Timetable& pi, VertexId root, std::int64_t period) {
  Timetable out = anchor_timetable(pi, root);
  for (auto& v : out) v = mod_floor(v, period);
  return out;
}

Timetable anchor_timetable(const Timetable& pi, VertexId root) {
  Timetable out = pi;
  const std::int64_t base = pi[root];
  for (auto& v : out) v -= base;
  return out;
}

NeighbourDiagnostic neighbour_diagnostic(const PespInstance& inst,
                                         const CycleBasis& basis,
                                         const CycleOffset& z) {
  NeighbourDiagnostic diag;
  diag.z = z;
  diag.column_test = neighbors(inst, basis, z);
  const PespInstance limit = limit_instance(inst);
  const OffsetVector p = offset_from_cycle_offset(basis, inst.graph, z);
  const WeightedDigraph here = kappa(limit, p);
  const int facet_dimension = static_cast<int>(inst.num_vertices()) - 2;
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    for (int sign : {1, -1}) {
      OffsetVector q = p;
      q[a] += sign;
      const CycleOffset next = basis.cycle_offset(q);
      if (next == z || diag.facet_test.count(next)) continue;
      if (!polytrope_nonempty(inst, q)) continue;
      WeightedDigraph meet = kappa(limit, q);
      for (std::size_t e = 0; e < meet.arcs.size(); ++e) {
        meet.arcs[e].weight = std::min(meet.arcs[e].weight, here.arcs[e].weight);
      }
      auto dist = all_pairs_shortest_paths(meet);
      if (dist && dimension_from_dist(*dist) == facet_dimension) diag.facet_test.insert(next);
    }
  }
  return diag;
}

}  // namespace pesp
