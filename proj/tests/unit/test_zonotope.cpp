#include "fixtures.hpp"
#include "pesp/errors.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/zonotope.hpp"
#include "tension_enumeration.hpp"

#include <doctest.h>

#include <set>

using namespace pesp;
using namespace pesp::testing;

namespace {

// Sum over trees of the product of co-tree spans over T: the determinant of a
// co-tree block of an integral basis is +-1.
Rational tree_sum_volume(const PespInstance& inst) {
  Rational total = 0;
  for (const ArcSet& tree : spanning_trees(inst.graph)) {
    std::vector<bool> in_tree(inst.num_arcs(), false);
    for (ArcId a : tree) in_tree[a] = true;
    Rational term = 1;
    for (ArcId a = 0; a < inst.num_arcs(); ++a) {
      if (!in_tree[a]) term *= make_rational(inst.span(a), inst.period);
    }
    total += term;
  }
  return total;
}

const PespInstance kTwoCycleEmpty =
    parse_instance("PERIOD 10\nARC a b 1 2 1\nARC b a 1 2 1\n");

}  // namespace

TEST_CASE("descriptor and box of the running triangle") {
  const PespInstance inst = running_triangle();
  const CycleBasis basis = auto_basis(inst);
  const ZonotopeDescriptor d = zonotope_descriptor(inst, basis);
  CHECK(d.dimension() == 1);
  CHECK(d.generators == IntMatrix{{9, -8, 9}});
  CHECK(d.translation == std::vector<std::int64_t>{5});
  const CycleBox box = cycle_box(inst, basis);
  CHECK(box.lower_bound(0) == make_rational(-3, 10));
  CHECK(box.upper_bound(0) == make_rational(23, 10));
  CHECK(box.first(0) == 0);
  CHECK(box.last(0) == 2);
  CHECK(width(inst, basis) == 3);
  CHECK(width_factors(inst, basis) == std::vector<std::int64_t>{3});
  CHECK(box_lattice_points(box, 10) == std::vector<CycleOffset>{{0}, {1}, {2}});
  CHECK_THROWS_AS(box_lattice_points(box, 2), EnumerationCapExceeded);
}

TEST_CASE("membership and lattice points") {
  const PespInstance inst = running_triangle();
  const CycleBasis basis = auto_basis(inst);
  for (std::int64_t z = 0; z <= 2; ++z) CHECK(zonotope_membership(inst, basis, CycleOffset{z}));
  CHECK_FALSE(zonotope_membership(inst, basis, CycleOffset{3}));
  CHECK_FALSE(zonotope_membership(inst, basis, CycleOffset{-1}));
  CHECK(lattice_points(inst, basis, 100) == std::vector<CycleOffset>{{0}, {1}, {2}});
}

TEST_CASE("lattice points match the tension census") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const PespInstance inst = random_instance(rng, {4, 6, 8, 1, 3});
    const CycleBasis basis = auto_basis(inst);
    std::vector<CycleOffset> expected;
    for (const auto& [z, v] : enumerate_tensions(inst, basis).best) expected.push_back(z);
    CHECK(lattice_points(inst, basis, 100000) == expected);
  }
}

TEST_CASE("fixed arcs are rejected") {
  const PespInstance inst =
      parse_instance("PERIOD 10\nARC a b 3 3 1\nARC b c 1 4 1\nARC c a 1 9 1\n");
  CHECK_THROWS_AS(zonotope_descriptor(inst, auto_basis(inst)), FixedArcPresent);
}

TEST_CASE("volume") {
  const PespInstance tri = running_triangle();
  CHECK(volume(tri, auto_basis(tri)) == make_rational(13, 5));
  const PespInstance sq = antiparallel_square();
  const Rational v = volume(sq, auto_basis(sq));
  CHECK(v == make_rational(2187, 250));
  CHECK(volume(sq, fundamental_cycle_basis(sq.graph, kSquareFaceTree)) == v);
  CHECK(v == tree_sum_volume(sq));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const PespInstance inst = random_instance(rng);
    const Rational expected = tree_sum_volume(inst);
    CHECK(volume(inst, auto_basis(inst)) == expected);
    std::mt19937_64 tree_rng(i);
    const ArcSet other = random_spanning_tree(inst.graph, tree_rng);
    CHECK(volume(inst, fundamental_cycle_basis(inst.graph, other)) == expected);
  }
}

TEST_CASE("tree structures") {
  const PespInstance tri = running_triangle();
  const ArcSet tree{0, 2};
  const SpanningTreeStructure from_v0 = structure_for_tree(tri.graph, tree, 0);
  CHECK(from_v0.upper == ArcSet{0, 2});
  CHECK(from_v0.lower.empty());
  const SpanningTreeStructure from_v2 = structure_for_tree(tri.graph, tree, 2);
  CHECK(from_v2.lower == ArcSet{0, 2});
  CHECK(from_v2.upper.empty());
  const SpanningTreeStructure from_v1 = structure_for_tree(tri.graph, tree, 1);
  CHECK(from_v1.lower == ArcSet{0});
  CHECK(from_v1.upper == ArcSet{2});
}

TEST_CASE("fine tiling of the running triangle") {
  const PespInstance inst = running_triangle();
  const CycleBasis basis = auto_basis(inst);
  const auto tiles = fine_tiling(inst, basis, 1, 100);
  REQUIRE(tiles.size() == 3);
  std::set<std::int64_t> breakpoints;
  std::set<CycleOffset> points;
  for (const Tile& t : tiles) {
    breakpoints.insert(t.translation[0]);
    breakpoints.insert(t.translation[0] + t.generators[0][0]);
    REQUIRE(t.lattice_point);
    points.insert(*t.lattice_point);
  }
  CHECK(breakpoints == std::set<std::int64_t>{-3, 6, 14, 23});
  CHECK(points == std::set<CycleOffset>{{0}, {1}, {2}});
  CHECK(validate_tiling(inst, basis, tiles, 100).ok());
  for (VertexId root = 0; root < 3; ++root) {
    CHECK(validate_tiling(inst, basis, fine_tiling(inst, basis, root, 100), 100).ok());
    CHECK(duality_check(inst, basis, root, 100).ok());
  }
}

TEST_CASE("fine tiling of the antiparallel square") {
  const PespInstance inst = antiparallel_square();
  const CycleBasis basis = fundamental_cycle_basis(inst.graph, kSquareFaceTree);
  const CycleBox box = cycle_box(inst, basis);
  CHECK(box.lower == std::vector<std::int64_t>{9, -18, 7});
  CHECK(box.upper == std::vector<std::int64_t>{27, 18, 25});
  CHECK(width(inst, basis) == 12);
  CHECK(lattice_points(inst, basis, 100).size() == 11);
  for (VertexId root = 0; root < 4; ++root) {
    const auto tiles = fine_tiling(inst, basis, root, 100);
    CHECK(tiles.size() == 12);
    const TilingReport report = validate_tiling(inst, basis, tiles, 100);
    CHECK(report.ok());
    CHECK(report.incidences.size() == 12);
    CHECK(duality_check(inst, basis, root, tiles).ok());
  }
}

TEST_CASE("a shifted tile breaks the tiling") {
  const PespInstance inst = antiparallel_square();
  const CycleBasis basis = fundamental_cycle_basis(inst.graph, kSquareFaceTree);
  auto tiles = fine_tiling(inst, basis, 0, 100);
  tiles[0].translation[0] += 1;
  CHECK_FALSE(validate_tiling(inst, basis, tiles, 100).ok());
  auto dropped = fine_tiling(inst, basis, 0, 100);
  dropped.pop_back();
  CHECK_FALSE(validate_tiling(inst, basis, dropped, 100).ok());
}

TEST_CASE("tile containment") {
  const PespInstance inst = running_triangle();
  const auto tiles = fine_tiling(inst, auto_basis(inst), 1, 100);
  for (const Tile& t : tiles) {
    const std::int64_t lo = std::min(t.translation[0], t.translation[0] + t.generators[0][0]);
    const std::int64_t hi = std::max(t.translation[0], t.translation[0] + t.generators[0][0]);
    CHECK(tile_contains(t, std::vector<std::int64_t>{lo}));
    CHECK(tile_contains(t, std::vector<std::int64_t>{hi}));
    CHECK_FALSE(tile_contains(t, std::vector<std::int64_t>{hi + 1}));
    CHECK_FALSE(tile_contains(t, std::vector<std::int64_t>{lo - 1}));
  }
}

TEST_CASE("duality entries carry the tropical vertex") {
  const PespInstance inst = running_triangle();
  const DualityReport report = duality_check(inst, auto_basis(inst), 1, 100);
  REQUIRE(report.entries.size() == 3);
  for (const DualityEntry& e : report.entries) {
    CHECK(e.feasible);
    CHECK(e.matches);
    if (e.z == CycleOffset{1}) CHECK(e.structure_vertex == Timetable{0, 3, 6});
    if (e.z == CycleOffset{0}) CHECK(e.structure_vertex == Timetable{0, 3, 10});
    if (e.z == CycleOffset{2}) CHECK(e.structure_vertex == Timetable{0, 9, 2});
  }
}

TEST_CASE("width bound chain") {
  const PespInstance tri = running_triangle();
  const WidthBoundReport r = width_bound_report(tri, auto_basis(tri));
  CHECK(r.holds());
  CHECK(r.tree_bound == make_rational(12, 5));
  CHECK(r.volume == make_rational(13, 5));
  CHECK(r.box_volume == make_rational(13, 5));
  CHECK(r.rounded_bound == make_rational(39, 10));
  CHECK(r.exponential_bound == 6);
  CHECK(r.num_spanning_trees == 3);
  CHECK(r.cycle_length_product == 3);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    const PespInstance inst = random_instance(rng);
    CHECK(width_bound_report(inst, auto_basis(inst)).holds());
  }
}

TEST_CASE("trees have a point zonotope") {
  const PespInstance tree = parse_instance("PERIOD 5\nARC a b 1 2 1\nARC b c 0 3 1\n");
  const CycleBasis basis = auto_basis(tree);
  CHECK(width(tree, basis) == 1);
  CHECK(volume(tree, basis) == 1);
  CHECK(lattice_points(tree, basis, 10) == std::vector<CycleOffset>{CycleOffset{}});
  const auto tiles = fine_tiling(tree, basis, 0, 10);
  CHECK(tiles.size() == 1);
  CHECK(validate_tiling(tree, basis, tiles, 10).ok());
  const WidthBoundReport r = width_bound_report(tree, basis);
  CHECK(r.strict_bound_vacuous);
  CHECK(r.holds());
}

TEST_CASE("an empty box reports the cycle without integer values") {
  const CycleBasis basis = auto_basis(kTwoCycleEmpty);
  CHECK(width(kTwoCycleEmpty, basis) == 0);
  CHECK(lattice_points(kTwoCycleEmpty, basis, 10).empty());
  const WidthBoundReport r = width_bound_report(kTwoCycleEmpty, basis);
  REQUIRE(r.empty_cycle);
  CHECK(*r.empty_cycle == 0);
}
