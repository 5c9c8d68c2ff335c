#include "fixtures.hpp"
#include "pesp/errors.hpp"
#include "pesp/fixed_offset.hpp"
#include "pesp/oracle.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/search.hpp"
#include "tension_enumeration.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace pesp;
using namespace pesp::testing;

namespace {

Solution solution_at(const PespInstance& inst, const CycleBasis& basis, const CycleOffset& z) {
  const auto r = minimize_over_polytrope(inst, offset_from_cycle_offset(basis, inst.graph, z));
  REQUIRE(r);
  return solution_from_result(inst, basis, *r);
}

}  // namespace

TEST_CASE("solutions from timetables") {
  const PespInstance inst = running_triangle();
  const CycleBasis basis = auto_basis(inst);
  const auto s = solution_from_timetable(inst, basis, Timetable{0, 8, 2});
  REQUIRE(s);
  CHECK(s->tension == Tension{8, 2, 4});
  CHECK(s->cycle_offset == CycleOffset{1});
  CHECK(s->objective == 14);
  CHECK(solution_consistent(inst, basis, *s));
  CHECK_FALSE(solution_from_timetable(inst, basis, Timetable{0, 0, 1}));
  const auto shifted = solution_from_timetable(inst, basis, Timetable{13, 21, 15});
  REQUIRE(shifted);
  CHECK(*shifted == *s);

  Solution broken = *s;
  broken.objective = 15;
  CHECK_FALSE(solution_consistent(inst, basis, broken));
}

TEST_CASE("initial solutions are feasible and seed-determined") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    const PespInstance inst = random_instance(rng);
    const CycleBasis basis = auto_basis(inst);
    if (!solve_exact(inst, basis)) continue;
    try {
      const Solution a = initial_solution(inst, basis, 3);
      CHECK(solution_consistent(inst, basis, a));
      CHECK(initial_solution(inst, basis, 3) == a);
    } catch (const RetriesExhausted&) {
    }
  }
}

TEST_CASE("arcs admitting every tension give a start in one try") {
  const PespInstance inst = parse_instance(
      "PERIOD 6\nARC a b 0 5 1\nARC b c 1 6 1\nARC c a 2 7 1\nARC a c 0 5 2\n");
  const CycleBasis basis = auto_basis(inst);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(solution_consistent(inst, basis, initial_solution(inst, basis, seed, 1)));
  }
}

TEST_CASE("an infeasible instance exhausts the retries") {
  const PespInstance inst = parse_instance("PERIOD 10\nARC a b 1 2 1\nARC b a 1 2 1\n");
  CHECK_THROWS_AS(initial_solution(inst, auto_basis(inst), 0, 50), RetriesExhausted);
}

TEST_CASE("search on the running triangle") {
  const PespInstance inst = running_triangle();
  const CycleBasis basis = auto_basis(inst);

  const TnsResult from_worst = tns(inst, basis, solution_at(inst, basis, CycleOffset{2}));
  CHECK(from_worst.moves == 1);
  CHECK(from_worst.solution.objective == 14);
  CHECK(from_worst.solution.cycle_offset == CycleOffset{1});
  CHECK(from_worst.local_optimum);
  REQUIRE(from_worst.trace.size() == 2);
  CHECK(from_worst.trace[0].kind == TraceRecord::Kind::Start);
  CHECK(from_worst.trace[1].kind == TraceRecord::Kind::Move);
  CHECK(solution_consistent(inst, basis, from_worst.solution));

  const TnsResult from_best = tns(inst, basis, solution_at(inst, basis, CycleOffset{1}));
  CHECK(from_best.moves == 0);
  CHECK(from_best.solution.objective == 14);

  TnsConfig sideways;
  sideways.sideways = true;
  const TnsResult wander = tns(inst, basis, solution_at(inst, basis, CycleOffset{2}), sideways);
  CHECK(wander.moves == 2);
  CHECK(wander.solution.cycle_offset == CycleOffset{0});
  CHECK(wander.solution.objective == 14);

  // A start that is not optimal in its own region is re-optimized first.
  const auto inner = solution_from_timetable(inst, basis, Timetable{0, 4, 9});
  REQUIRE(inner);
  REQUIRE(inner->objective > 14);
  const TnsResult reopt = tns(inst, basis, *inner);
  REQUIRE(reopt.trace.size() >= 2);
  CHECK(reopt.trace[1].kind == TraceRecord::Kind::Reoptimize);
}

TEST_CASE("search on a tree instance") {
  const PespInstance inst = parse_instance("PERIOD 5\nARC a b 1 2 3\nARC b c 0 3 1\n");
  const CycleBasis basis = auto_basis(inst);
  const TnsResult r = tns(inst, basis, initial_solution(inst, basis, 0));
  CHECK(r.moves == 0);
  CHECK(r.solution.objective == 3);
}

TEST_CASE("search ends in a local optimum no better than the global one") {
  std::mt19937_64 rng(71);
  int searched = 0;
  for (int i = 0; i < 60; ++i) {
    const PespInstance inst = random_instance(rng);
    const CycleBasis basis = auto_basis(inst);
    const auto exact = solve_exact(inst, basis);
    if (!exact) continue;
    Solution start = *exact;
    try {
      start = initial_solution(inst, basis, static_cast<std::uint64_t>(i));
    } catch (const RetriesExhausted&) {
    }
    for (Strategy strategy : {Strategy::BestImprovement, Strategy::FirstImprovement}) {
      TnsConfig config;
      config.strategy = strategy;
      config.seed = static_cast<std::uint64_t>(i);
      const TnsResult r = tns(inst, basis, start, config);
      CHECK(solution_consistent(inst, basis, r.solution));
      CHECK(r.solution.objective >= exact->objective);
      CHECK(r.solution.objective <= start.objective);
      CHECK(r.local_optimum);
      for (std::size_t k = 1; k < r.trace.size(); ++k) {
        CHECK(r.trace[k].objective < r.trace[k - 1].objective);
      }
      for (const CycleOffset& z : neighbors(inst, basis, r.solution.cycle_offset)) {
        const auto opt =
            minimize_over_polytrope(inst, offset_from_cycle_offset(basis, inst.graph, z));
        REQUIRE(opt);
        CHECK(opt->objective >= r.solution.objective);
      }
      ++searched;
    }
  }
  CHECK(searched > 40);
}

TEST_CASE("iteration cap") {
  const PespInstance inst = running_triangle();
  const CycleBasis basis = auto_basis(inst);
  TnsConfig config;
  config.max_iterations = 0;
  const TnsResult r = tns(inst, basis, solution_at(inst, basis, CycleOffset{2}), config);
  CHECK(r.moves == 0);
  CHECK_FALSE(r.local_optimum);
}

TEST_CASE("thread count does not change the result") {
  const PespInstance inst = antiparallel_square();
  const CycleBasis basis = auto_basis(inst);
  const Solution start = initial_solution(inst, basis, 5);
  setenv("PESP_THREADS", "1", 1);
  const TnsResult one = tns(inst, basis, start);
  setenv("PESP_THREADS", "4", 1);
  const TnsResult four = tns(inst, basis, start);
  unsetenv("PESP_THREADS");
  CHECK(one.solution == four.solution);
  CHECK(one.moves == four.moves);
}

TEST_CASE("neighbourhood graph") {
  const PespInstance inst = running_triangle();
  const NeighbourhoodGraph g = neighbourhood_graph(inst, auto_basis(inst), 100);
  CHECK(g.nodes == std::vector<CycleOffset>{{0}, {1}, {2}});
  CHECK(g.optimum == std::vector<std::int64_t>{14, 14, 24});
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}
