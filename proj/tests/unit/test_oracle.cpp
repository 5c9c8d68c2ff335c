#include "fixtures.hpp"
#include "pesp/errors.hpp"
#include "pesp/oracle.hpp"
#include "tension_enumeration.hpp"

#include <doctest.h>

using namespace pesp;
using namespace pesp::testing;

TEST_CASE("exact optimum of the fixtures") {
  const PespInstance tri = running_triangle();
  const CycleBasis basis = auto_basis(tri);
  const auto s = solve_exact(tri, basis);
  REQUIRE(s);
  CHECK(s->objective == 14);
  CHECK(s->cycle_offset == CycleOffset{0});
  CHECK(solution_consistent(tri, basis, *s));
  const CrosscheckReport report = crosscheck(tri, basis);
  REQUIRE(report.brute_force);
  CHECK(report.brute_force->objective == 14);

  const PespInstance sq = antiparallel_square();
  const auto census = enumerate_tensions(sq, auto_basis(sq));
  const auto square = solve_exact(sq, auto_basis(sq));
  REQUIRE(square);
  CHECK(square->objective == *census.optimum);
}

TEST_CASE("exact and grid oracles agree with the tension census") {
  std::mt19937_64 rng(81);
  int feasible = 0;
  for (int i = 0; i < 60; ++i) {
    const PespInstance inst = random_instance(rng, {4, 6, 8, 1, 4});
    const CycleBasis basis = auto_basis(inst);
    const TensionCensus census = enumerate_tensions(inst, basis);
    const CrosscheckReport report = crosscheck(inst, basis);
    REQUIRE(report.exact.has_value() == census.optimum.has_value());
    REQUIRE(report.brute_force.has_value() == census.optimum.has_value());
    if (!census.optimum) continue;
    ++feasible;
    CHECK(report.exact->objective == *census.optimum);
    CHECK(report.brute_force->objective == *census.optimum);
  }
  CHECK(feasible > 20);
}

TEST_CASE("the optimum does not depend on the cycle basis") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 40; ++i) {
    const PespInstance inst = random_instance(rng);
    std::mt19937_64 tree_rng(static_cast<std::uint64_t>(i));
    const CycleBasis a = auto_basis(inst);
    const CycleBasis b = fundamental_cycle_basis(inst.graph, random_spanning_tree(inst.graph, tree_rng));
    const auto sa = solve_exact(inst, a);
    const auto sb = solve_exact(inst, b);
    REQUIRE(sa.has_value() == sb.has_value());
    if (sa) CHECK(sa->objective == sb->objective);
  }
}

TEST_CASE("degenerate instances") {
  const PespInstance zero =
      parse_instance("PERIOD 10\nARC a b 3 12 0\nARC b c 2 10 0\nARC a c 4 13 0\n");
  const auto z = solve_exact(zero, auto_basis(zero));
  REQUIRE(z);
  CHECK(z->objective == 0);

  const PespInstance infeasible = parse_instance("PERIOD 10\nARC a b 1 2 1\nARC b a 1 2 1\n");
  CHECK_FALSE(solve_exact(infeasible, auto_basis(infeasible)));
  CHECK_FALSE(brute_force_timetable(infeasible, auto_basis(infeasible)));
  CHECK(describe(std::nullopt) == "infeasible");

  const PespInstance tree = parse_instance("PERIOD 5\nARC a b 1 2 3\nARC b c 0 3 2\n");
  const auto t = solve_exact(tree, auto_basis(tree));
  REQUIRE(t);
  CHECK(t->objective == 3);
}

TEST_CASE("oracle caps") {
  const PespInstance sq = antiparallel_square();
  OracleCaps caps;
  caps.max_width = 5;
  CHECK_THROWS_AS(solve_exact(sq, auto_basis(sq), caps), EnumerationCapExceeded);
  OracleCaps grid;
  grid.grid.max_period = 5;
  CHECK_THROWS_AS(brute_force_timetable(sq, auto_basis(sq), grid), EnumerationCapExceeded);
}
