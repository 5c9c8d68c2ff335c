#include "fixtures.hpp"
#include "pesp/errors.hpp"
#include "pesp/instance.hpp"
#include "pesp/oracle.hpp"
#include "pesp/polytrope.hpp"

#include <doctest.h>

#include <sstream>

using namespace pesp;
using namespace pesp::testing;

TEST_CASE("parse keeps arc order and names") {
  const PespInstance inst = running_triangle();
  CHECK(inst.period == 10);
  CHECK(inst.num_vertices() == 3);
  CHECK(inst.vertex_names == std::vector<std::string>{"v0", "v1", "v2"});
  CHECK(inst.graph.arc(2) == Arc{1, 2});
  CHECK(inst.lower == std::vector<std::int64_t>{3, 2, 4});
  CHECK(inst.upper == std::vector<std::int64_t>{12, 10, 13});
  CHECK(validate(inst).empty());
  CHECK(inst.find_vertex("v2") == VertexId{2});
  CHECK_FALSE(inst.find_vertex("v9"));
}

TEST_CASE("instance files in the repository parse") {
  const PespInstance tri = read_instance_file(PESP_INSTANCE_DIR "/running_triangle.pesp");
  CHECK(to_text(tri) == to_text(running_triangle()));
  const PespInstance sq = read_instance_file(PESP_INSTANCE_DIR "/antiparallel_square.pesp");
  CHECK(sq.num_vertices() == 4);
  CHECK(sq.num_arcs() == 6);
  CHECK(to_text(sq) == to_text(antiparallel_square()));
}

TEST_CASE("declared events fix vertex order, comments are ignored") {
  const PespInstance inst = parse_instance(
      "# header\nPERIOD 6\nEVENT b\nEVENT a\nARC a b 1 2 0  # trailing\n");
  CHECK(inst.vertex_names == std::vector<std::string>{"b", "a"});
  CHECK(inst.graph.arc(0) == Arc{1, 0});
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_instance("PERIOD 10\nARC a b 1 2 1\nBOGUS\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_instance("PERIOD ten\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("ARC a b 1 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nPERIOD 10\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a b 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a a 1 2 1\n"), ParseError);
}

TEST_CASE("empty or disconnected arc sets are rejected") {
  CHECK_THROWS_AS(parse_instance("PERIOD 10\n"), DisconnectedGraph);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nEVENT a\nEVENT b\n"), DisconnectedGraph);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a b 1 2 1\nARC c d 1 2 1\n"),
                  DisconnectedGraph);
}

TEST_CASE("bound violations name the arc") {
  try {
    parse_instance("PERIOD 10\nARC a b 1 2 1\nARC b c 0 10 1\n");
    FAIL("expected invalid bounds");
  } catch (const InvalidBounds& e) {
    CHECK(e.arc() == 1);
  }
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a b -1 2 1\n"), InvalidBounds);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a b 10 12 1\n"), InvalidBounds);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a b 5 4 1\n"), InvalidBounds);
  CHECK_THROWS_AS(parse_instance("PERIOD 10\nARC a b 5 6 -1\n"), InvalidBounds);
}

TEST_CASE("validate lists violations") {
  PespInstance inst = running_triangle();
  inst.upper[1] = inst.lower[1] + 10;
  inst.lower[2] = -1;
  const ValidationReport report = validate(inst);
  REQUIRE(report.size() == 3);
  CHECK(report[0].arc == ArcId{1});
  CHECK(report[0].message == "span not < T");
  CHECK(report[1].arc == ArcId{2});
  CHECK(report[1].message == "lower bound negative");
  CHECK(report[2].message == "span not < T");
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const PespInstance inst = random_instance(rng);
    const std::string text = to_text(inst);
    CHECK(to_text(parse_instance(text)) == text);
  }
}

TEST_CASE("limit instance") {
  const PespInstance limit = limit_instance(running_triangle());
  CHECK(limit.upper == std::vector<std::int64_t>{13, 12, 14});
  CHECK(limit.relaxed);
  CHECK(validate(limit).empty());
  CHECK(limit_instance(limit).upper == limit.upper);

  std::mt19937_64 rng(4);
  // Every timetable is feasible once each arc admits a full period.
  for (int i = 0; i < 100; ++i) {
    const PespInstance inst = limit_instance(random_instance(rng));
    Timetable pi(inst.num_vertices());
    for (auto& v : pi) v = std::uniform_int_distribution<std::int64_t>(-20, 20)(rng);
    const TensionAssignment ta = timetable_to_tension(inst, pi);
    CHECK(ta.feasible());
    CHECK(polytrope_nonempty(inst, ta.offset));
  }
}

TEST_CASE("contraction without fixed arcs is the identity") {
  const PespInstance inst = running_triangle();
  const Contraction c = contract_fixed_arcs(inst);
  CHECK(to_text(c.instance) == to_text(inst));
  CHECK(c.vertex_map == std::vector<VertexId>{0, 1, 2});
  CHECK(c.objective_offset == 0);
}

TEST_CASE("contracting one arc of a triangle keeps one cycle") {
  PespInstance inst = running_triangle();
  inst.lower[0] = inst.upper[0] = 5;
  const Contraction c = contract_fixed_arcs(inst);
  CHECK(c.instance.num_vertices() == 2);
  CHECK(c.instance.num_arcs() == 2);
  CHECK(cyclomatic_number(c.instance.graph) == cyclomatic_number(inst.graph));
  CHECK(validate(c.instance).empty());
  CHECK_FALSE(c.arc_map[0]);
}

TEST_CASE("a chain of fixed arcs collapses to one vertex") {
  const PespInstance inst = parse_instance(
      "PERIOD 10\nARC a b 3 3 1\nARC b c 4 4 1\nARC c d 2 2 2\nARC a d 5 9 1\n");
  const Contraction c = contract_fixed_arcs(inst);
  CHECK(c.instance.num_vertices() == 1);
  CHECK(c.instance.num_arcs() == 0);
  // a -> d is pinned to 9 by the chain.
  CHECK(c.objective_offset == 3 + 4 + 4 + 9);
  CHECK(c.vertex_shift == std::vector<std::int64_t>{0, 3, 7, 9});
}

TEST_CASE("inconsistent fixed cycles are infeasible") {
  const PespInstance inst = parse_instance("PERIOD 10\nARC a b 2 2 1\nARC a b 3 3 1\n");
  CHECK_THROWS_AS(contract_fixed_arcs(inst), InfeasibleFixedCycle);
}

TEST_CASE("contraction preserves the optimum up to its offset") {
  std::mt19937_64 rng(33);
  RandomInstanceSpec spec;
  spec.min_span = 0;
  int contracted = 0;
  for (int i = 0; i < 60; ++i) {
    const PespInstance inst = random_instance(rng, spec);
    const auto original = brute_force_timetable(inst, auto_basis(inst));
    std::optional<Contraction> c;
    try {
      c = contract_fixed_arcs(inst);
    } catch (const InfeasibleFixedCycle&) {
      CHECK_FALSE(original);
      continue;
    }
    const auto reduced = brute_force_timetable(c->instance, auto_basis(c->instance));
    REQUIRE(original.has_value() == reduced.has_value());
    if (original) CHECK(original->objective == reduced->objective + c->objective_offset);
    if (c->instance.num_vertices() < inst.num_vertices()) ++contracted;
  }
  CHECK(contracted > 0);
}
