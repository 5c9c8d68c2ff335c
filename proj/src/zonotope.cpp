#include "pesp/zonotope.hpp"

#include "pesp/errors.hpp"
#include "pesp/polytrope.hpp"

namespace pesp {

namespace {

std::vector<std::int64_t> scaled_spans(const PespInstance& inst) {
  std::vector<std::int64_t> span(inst.num_arcs());
  for (ArcId a = 0; a < inst.num_arcs(); ++a) span[a] = inst.span(a);
  return span;
}

Rational power(const Rational& base, std::size_t exponent) {
  Rational out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

ArcSet complement(std::size_t num_arcs, std::span<const ArcId> tree) {
  std::vector<bool> in_tree(num_arcs, false);
  for (ArcId a : tree) in_tree[a] = true;
  ArcSet out;
  for (ArcId a = 0; a < num_arcs; ++a) {
    if (!in_tree[a]) out.push_back(a);
  }
  return out;
}

// |det| of the scaled generator columns of `cotree`, still scaled by T^mu.
BigInt cotree_determinant(const CycleBasis& basis, const std::vector<std::int64_t>& span,
                          const ArcSet& cotree) {
  const std::size_t mu = basis.size();
  std::vector<std::vector<BigInt>> m(mu, std::vector<BigInt>(mu));
  for (std::size_t k = 0; k < mu; ++k) {
    for (std::size_t j = 0; j < mu; ++j) {
      m[k][j] = BigInt(basis.gamma()[k][cotree[j]]) * span[cotree[j]];
    }
  }
  BigInt d = determinant(m);
  return d < 0 ? BigInt(-d) : d;
}

BigInt tile_determinant(const Tile& tile) {
  const std::size_t mu = tile.generators.size();
  std::vector<std::vector<BigInt>> m(mu, std::vector<BigInt>(mu));
  for (std::size_t k = 0; k < mu; ++k) {
    for (std::size_t j = 0; j < mu; ++j) m[k][j] = tile.generators[j][k];
  }
  BigInt d = determinant(m);
  return d < 0 ? BigInt(-d) : d;
}

std::vector<std::int64_t> scaled(const CycleOffset& z, std::int64_t period) {
  std::vector<std::int64_t> out(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) out[k] = z[k] * period;
  return out;
}

}  // namespace

CycleBox cycle_box(const PespInstance& inst, const CycleBasis& basis) {
  CycleBox box;
  box.period = inst.period;
  for (const auto& row : basis.gamma()) {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (ArcId a = 0; a < inst.num_arcs(); ++a) {
      if (row[a] > 0) {
        lo += row[a] * inst.lower[a];
        hi += row[a] * inst.upper[a];
      } else if (row[a] < 0) {
        lo += row[a] * inst.upper[a];
        hi += row[a] * inst.lower[a];
      }
    }
    box.lower.push_back(lo);
    box.upper.push_back(hi);
  }
  return box;
}

std::vector<std::int64_t> width_factors(const PespInstance& inst,
                                        const CycleBasis& basis) {
  const CycleBox box = cycle_box(inst, basis);
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < box.dimension(); ++k) out.push_back(box.count(k));
  return out;
}

BigInt width(const PespInstance& inst, const CycleBasis& basis) {
  BigInt w = 1;
  for (std::int64_t f : width_factors(inst, basis)) w *= f;
  return w;
}

std::vector<CycleOffset> box_lattice_points(const CycleBox& box, std::size_t cap) {
  const std::size_t mu = box.dimension();
  BigInt total = 1;
  for (std::size_t k = 0; k < mu; ++k) total *= box.count(k);
  if (total > cap) throw EnumerationCapExceeded("cycle box lattice", cap);
  std::vector<CycleOffset> out;
  if (total == 0) return out;
  CycleOffset z(mu);
  for (std::size_t k = 0; k < mu; ++k) z[k] = box.first(k);
  for (;;) {
    out.push_back(z);
    std::size_t k = mu;
    while (k > 0) {
      --k;
      if (z[k] < box.last(k)) {
        ++z[k];
        break;
      }
      z[k] = box.first(k);
      if (k == 0) return out;
    }
    if (mu == 0) return out;
  }
}

std::vector<std::int64_t> ZonotopeDescriptor::generator(ArcId a) const {
  std::vector<std::int64_t> col(generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k) col[k] = generators[k][a];
  return col;
}

ZonotopeDescriptor zonotope_descriptor(const PespInstance& inst,
                                       const CycleBasis& basis) {
  ZonotopeDescriptor d;
  d.basis = basis;
  d.period = inst.period;
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    if (inst.span(a) == 0) throw FixedArcPresent(a);
  }
  for (const auto& row : basis.gamma()) {
    std::vector<std::int64_t> gen(inst.num_arcs());
    for (ArcId a = 0; a < inst.num_arcs(); ++a) gen[a] = row[a] * inst.span(a);
    d.generators.push_back(std::move(gen));
  }
  d.translation = basis.apply(inst.lower);
  return d;
}

bool zonotope_membership(const PespInstance& inst, const CycleBasis& basis,
                         const CycleOffset& z) {
  return polytrope_nonempty(inst, offset_from_cycle_offset(basis, inst.graph, z));
}

std::vector<CycleOffset> lattice_points(const PespInstance& inst, const CycleBasis& basis,
                                        std::size_t cap_width) {
  std::vector<CycleOffset> out;
  for (CycleOffset& z : box_lattice_points(cycle_box(inst, basis), cap_width)) {
    if (zonotope_membership(inst, basis, z)) out.push_back(std::move(z));
  }
  return out;
}

Rational volume(const PespInstance& inst, const CycleBasis& basis, std::size_t cap) {
  const std::size_t mu = basis.size();
  if (mu == 0) return 1;
  const auto span = scaled_spans(inst);
  BigInt total = 0;
  for (const ArcSet& tree : spanning_trees(inst.graph, cap)) {
    total += cotree_determinant(basis, span, complement(inst.num_arcs(), tree));
  }
  return Rational(total) / power(Rational(inst.period), mu);
}

SpanningTreeStructure structure_for_tree(const Digraph& g, std::span<const ArcId> tree,
                                         VertexId root) {
  if (!is_spanning_tree(g, tree)) throw NotASpanningTree("cannot orient");
  SpanningTreeStructure s;
  s.tree.assign(tree.begin(), tree.end());
  std::sort(s.tree.begin(), s.tree.end());
  std::vector<bool> in_tree(g.num_arcs(), false);
  for (ArcId a : tree) in_tree[a] = true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.incident(v)) {
      if (!in_tree[a]) continue;
      const Arc& arc = g.arc(a);
      VertexId w = arc.tail == v ? arc.head : arc.tail;
      if (seen[w]) continue;
      seen[w] = true;
      (arc.tail == v ? s.upper : s.lower).push_back(a);
      stack.push_back(w);
    }
  }
  std::sort(s.lower.begin(), s.lower.end());
  std::sort(s.upper.begin(), s.upper.end());
  return s;
}

bool tile_contains(const Tile& tile, std::span<const std::int64_t> scaled_point) {
  const std::size_t mu = tile.generators.size();
  if (mu == 0) return true;
  RationalMatrix m(mu, std::vector<Rational>(mu));
  std::vector<Rational> rhs(mu);
  for (std::size_t k = 0; k < mu; ++k) {
    for (std::size_t j = 0; j < mu; ++j) m[k][j] = tile.generators[j][k];
    rhs[k] = scaled_point[k] - tile.translation[k];
  }
  auto lambda = solve_square(std::move(m), std::move(rhs));
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(),
                     [](const Rational& l) { return l >= 0 && l <= 1; });
}

bool tile_contains(const Tile& tile, const CycleOffset& z, std::int64_t period) {
  return tile_contains(tile, scaled(z, period));
}

std::vector<Tile> fine_tiling(const PespInstance& inst, const CycleBasis& basis,
                              VertexId root, std::size_t cap_width,
                              std::size_t cap_trees) {
  const auto points = lattice_points(inst, basis, cap_width);
  std::vector<Tile> tiles;
  for (const ArcSet& tree : spanning_trees(inst.graph, cap_trees)) {
    Tile tile;
    tile.structure = structure_for_tree(inst.graph, tree, root);
    tile.cotree = complement(inst.num_arcs(), tree);
    for (ArcId a : tile.cotree) {
      auto col = basis.column(a);
      for (auto& c : col) c *= inst.span(a);
      tile.generators.push_back(std::move(col));
    }
    std::vector<std::int64_t> v = inst.lower;
    for (ArcId a : tile.structure.upper) v[a] = inst.upper[a];
    tile.translation = basis.apply(v);
    for (const CycleOffset& z : points) {
      if (tile_contains(tile, z, inst.period)) {
        tile.lattice_point = z;
        break;
      }
    }
    tiles.push_back(std::move(tile));
  }
  return tiles;
}

TilingReport validate_tiling(const PespInstance& inst, const CycleBasis& basis,
                             const std::vector<Tile>& tiles, std::size_t cap_width,
                             std::size_t cap_trees) {
  TilingReport report;
  const std::size_t mu = basis.size();
  BigInt det_sum = 0;
  for (const Tile& tile : tiles) {
    const BigInt d = tile_determinant(tile);
    if (d == 0) report.nonsingular = false;
    det_sum += d;
  }
  report.determinant_sum = Rational(det_sum) / power(Rational(inst.period), mu);
  report.volume = volume(inst, basis, cap_trees);
  report.volume_matches = report.determinant_sum == report.volume;

  // Every corner of a tile is Gamma w for a tension w of the box: lower
  // bounds, upper bounds on the upper set, and upper bounds on the chosen
  // co-tree arcs.
  for (const Tile& tile : tiles) {
    if (tile.cotree.size() != mu || tile.generators.size() != mu) {
      report.contained = false;
      continue;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << mu); ++mask) {
      std::vector<std::int64_t> corner = tile.translation;
      std::vector<std::int64_t> w = inst.lower;
      for (ArcId a : tile.structure.upper) w[a] = inst.upper[a];
      for (std::size_t j = 0; j < mu; ++j) {
        if (!(mask >> j & 1)) continue;
        for (std::size_t k = 0; k < mu; ++k) corner[k] += tile.generators[j][k];
        w[tile.cotree[j]] = inst.upper[tile.cotree[j]];
      }
      if (basis.apply(w) != corner) report.contained = false;
    }
  }

  const auto points = lattice_points(inst, basis, cap_width);
  std::vector<std::size_t> per_tile(tiles.size(), 0);
  for (const CycleOffset& z : points) {
    bool covered = false;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      if (!tile_contains(tiles[i], z, inst.period)) continue;
      covered = true;
      ++per_tile[i];
      report.incidences.emplace_back(i, z);
    }
    if (!covered) report.lattice_covered = false;
  }
  for (std::size_t c : per_tile) {
    if (c > 1) report.at_most_one_point = false;
  }
  std::sort(report.incidences.begin(), report.incidences.end());
  return report;
}

bool DualityReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const DualityEntry& e) { return e.feasible && e.matches; });
}

DualityReport duality_check(const PespInstance& inst, const CycleBasis& basis,
                            VertexId root, const std::vector<Tile>& tiles) {
  DualityReport report;
  report.root = root;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (!tiles[i].lattice_point) continue;
    DualityEntry entry;
    entry.tile = i;
    entry.z = *tiles[i].lattice_point;
    const Polytrope poly = polytrope_for_cycle_offset(inst, basis, entry.z);
    entry.structure_vertex =
        timetable_from_structure(inst, tiles[i].structure, poly.offset);
    entry.feasible = timetable_membership(inst, poly.offset, entry.structure_vertex);
    if (!poly.empty()) {
      entry.tropical_vertex = tropical_vertices(poly)[root];
      entry.matches = entry.tropical_vertex == entry.structure_vertex;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

DualityReport duality_check(const PespInstance& inst, const CycleBasis& basis,
                            VertexId root, std::size_t cap_width,
                            std::size_t cap_trees) {
  return duality_check(inst, basis, root,
                       fine_tiling(inst, basis, root, cap_width, cap_trees));
}

bool WidthBoundReport::holds() const {
  bool ok = tree_bound_holds && volume_bound_holds && trees_bound_holds;
  if (!empty_cycle) {
    ok = ok && box_bound_holds && (strict_bound_vacuous || rounded_bound_holds);
  }
  return ok;
}

WidthBoundReport width_bound_report(const PespInstance& inst, const CycleBasis& basis,
                                    std::size_t cap_trees) {
  WidthBoundReport r;
  r.mu = basis.size();
  r.width_factors = width_factors(inst, basis);
  r.width = width(inst, basis);
  r.num_spanning_trees = count_spanning_trees_determinant(inst.graph);
  r.min_span = inst.num_arcs() == 0 ? 0 : inst.span(0);
  for (ArcId a = 0; a < inst.num_arcs(); ++a) r.min_span = std::min(r.min_span, inst.span(a));

  r.cycle_length_product = 1;
  r.box_volume = 1;
  Rational rounding = 1;
  for (std::size_t k = 0; k < r.mu; ++k) {
    const auto& row = basis.gamma()[k];
    std::int64_t total = 0;
    for (ArcId a = 0; a < inst.num_arcs(); ++a) total += std::abs(row[a]) * inst.span(a);
    const Rational s = make_rational(total, inst.period);
    r.cycle_spans.push_back(s);
    r.cycle_length_product *= basis.cycles()[k].length();
    r.box_volume *= s;
    const BigInt whole = floor(s);
    rounding *= s / Rational(whole > 1 ? whole : BigInt(1));
    if (r.width_factors[k] == 0 && !r.empty_cycle) r.empty_cycle = k;
  }

  r.tree_bound = Rational(r.num_spanning_trees) *
                 power(make_rational(r.min_span, inst.period), r.mu);
  r.volume = volume(inst, basis, cap_trees);
  r.rounded_bound = Rational(r.width) * rounding;
  r.exponential_bound = Rational(r.width) * power(Rational(2), r.mu);

  r.tree_bound_holds = r.tree_bound <= r.volume;
  r.volume_bound_holds = r.volume <= r.box_volume;
  r.box_bound_holds = r.box_volume <= r.rounded_bound;
  r.rounded_bound_holds = r.rounded_bound < r.exponential_bound;
  r.strict_bound_vacuous = r.mu == 0;
  r.trees_bound_holds = r.num_spanning_trees <= r.cycle_length_product;
  return r;
}

}  // namespace pesp
