#include "pesp/search.hpp"

#include "pesp/errors.hpp"
#include "pesp/parallel.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/zonotope.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace pesp {

std::optional<Solution> solution_from_timetable(const PespInstance& inst,
                                                const CycleBasis& basis,
                                                const Timetable& pi) {
  const Timetable normal = normalize_timetable(pi, 0, inst.period);
  TensionAssignment ta = timetable_to_tension(inst, normal);
  if (!ta.feasible()) return std::nullopt;
  Solution s;
  s.timetable = normal;
  s.tension = std::move(ta.tension);
  s.offset = std::move(ta.offset);
  s.cycle_offset = basis.cycle_offset(s.offset);
  for (ArcId a = 0; a < inst.num_arcs(); ++a) s.objective += inst.weight[a] * s.tension[a];
  return s;
}

Solution solution_from_result(const PespInstance& inst, const CycleBasis& basis,
                              const FixedOffsetResult& result) {
  auto s = solution_from_timetable(inst, basis, result.timetable);
  if (!s || s->tension != result.tension) {
    throw std::logic_error("optimizer returned an inconsistent timetable");
  }
  return *s;
}

bool solution_consistent(const PespInstance& inst, const CycleBasis& basis,
                         const Solution& s) {
  if (s.timetable.size() != inst.num_vertices() || s.tension.size() != inst.num_arcs() ||
      s.offset.size() != inst.num_arcs()) {
    return false;
  }
  std::int64_t value = 0;
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    if (s.tension[a] < inst.lower[a] || s.tension[a] > inst.upper[a]) return false;
    const Arc& arc = inst.graph.arc(a);
    if (s.timetable[arc.head] - s.timetable[arc.tail] + inst.period * s.offset[a] !=
        s.tension[a]) {
      return false;
    }
    value += inst.weight[a] * s.tension[a];
  }
  return value == s.objective && basis.cycle_offset(s.offset) == s.cycle_offset;
}

Solution initial_solution(const PespInstance& inst, const CycleBasis& basis,
                          std::uint64_t seed, std::size_t max_tries) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    const ArcSet tree = random_spanning_tree(inst.graph, rng);
    std::vector<bool> in_tree(inst.num_arcs(), false);
    for (ArcId a : tree) in_tree[a] = true;
    Timetable pi(inst.num_vertices());
    std::vector<bool> seen(inst.num_vertices(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (ArcId a : inst.graph.incident(v)) {
        if (!in_tree[a]) continue;
        const Arc& arc = inst.graph.arc(a);
        VertexId w = arc.tail == v ? arc.head : arc.tail;
        if (seen[w]) continue;
        seen[w] = true;
        std::int64_t x = inst.lower[a];
        if (attempt > 0) {
          x = std::uniform_int_distribution<std::int64_t>(inst.lower[a], inst.upper[a])(rng);
        }
        pi[w] = arc.tail == v ? pi[v] + x : pi[v] - x;
        stack.push_back(w);
      }
    }
    if (auto s = solution_from_timetable(inst, basis, pi)) return *s;
  }
  throw RetriesExhausted(max_tries);
}

namespace {

struct Candidate {
  ArcId arc = 0;
  int sign = 0;
  OffsetVector offset;
  CycleOffset z;
};

std::vector<Candidate> candidates(const CycleBasis& basis, const Solution& current) {
  std::vector<Candidate> out;
  std::set<CycleOffset> seen{current.cycle_offset};
  for (ArcId a = 0; a < basis.num_arcs(); ++a) {
    for (int sign : {1, -1}) {
      Candidate c{a, sign, current.offset, {}};
      c.offset[a] += sign;
      c.z = basis.cycle_offset(c.offset);
      if (seen.insert(c.z).second) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

TnsResult tns(const PespInstance& inst, const CycleBasis& basis, const Solution& start,
              const TnsConfig& config) {
  TnsResult result;
  result.solution = start;
  result.trace.push_back({TraceRecord::Kind::Start, start.cycle_offset, start.objective});
  if (auto opt = minimize_over_polytrope(inst, start.offset)) {
    if (opt->objective < start.objective) {
      result.solution = solution_from_result(inst, basis, *opt);
      result.trace.push_back({TraceRecord::Kind::Reoptimize,
                              result.solution.cycle_offset, result.solution.objective});
    }
  }

  std::set<CycleOffset> visited{result.solution.cycle_offset};
  std::mt19937_64 rng(config.seed);
  auto accepts = [&](std::int64_t value, const CycleOffset& z) {
    if (config.tabu && visited.count(z)) return false;
    const std::int64_t current = result.solution.objective;
    return value < current || (config.sideways && value == current && !visited.count(z));
  };

  result.local_optimum = false;
  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    std::vector<Candidate> cands = candidates(basis, result.solution);
    std::optional<std::size_t> chosen;
    std::vector<std::optional<FixedOffsetResult>> solved;

    if (config.strategy == Strategy::BestImprovement) {
      solved = parallel_map<std::optional<FixedOffsetResult>>(
          cands.size(), [&](std::size_t i) -> std::optional<FixedOffsetResult> {
            if (config.tabu && visited.count(cands[i].z)) return std::nullopt;
            return minimize_over_polytrope(inst, cands[i].offset);
          });
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!solved[i] || !accepts(solved[i]->objective, cands[i].z)) continue;
        if (!chosen || solved[i]->objective < solved[*chosen]->objective ||
            (solved[i]->objective == solved[*chosen]->objective &&
             cands[i].z < cands[*chosen].z)) {
          chosen = i;
        }
      }
    } else {
      std::vector<std::size_t> order(cands.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      solved.resize(cands.size());
      for (std::size_t i : order) {
        if (config.tabu && visited.count(cands[i].z)) continue;
        solved[i] = minimize_over_polytrope(inst, cands[i].offset);
        if (solved[i] && accepts(solved[i]->objective, cands[i].z)) {
          chosen = i;
          break;
        }
      }
    }

    if (!chosen) {
      result.local_optimum = true;
      break;
    }
    const Candidate& c = cands[*chosen];
    result.solution = solution_from_result(inst, basis, *solved[*chosen]);
    visited.insert(result.solution.cycle_offset);
    ++result.moves;
    result.trace.push_back({TraceRecord::Kind::Move, result.solution.cycle_offset,
                            result.solution.objective, c.arc, c.sign});
  }
  return result;
}

NeighbourhoodGraph neighbourhood_graph(const PespInstance& inst, const CycleBasis& basis,
                                       std::size_t cap_width) {
  NeighbourhoodGraph graph;
  graph.nodes = lattice_points(inst, basis, cap_width);
  for (const CycleOffset& z : graph.nodes) {
    const OffsetVector p = offset_from_cycle_offset(basis, inst.graph, z);
    graph.optimum.push_back(minimize_over_polytrope(inst, p)->objective);
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    for (const CycleOffset& next : neighbors(inst, basis, graph.nodes[i])) {
      auto it = std::lower_bound(graph.nodes.begin(), graph.nodes.end(), next);
      const auto j = static_cast<std::size_t>(it - graph.nodes.begin());
      if (it != graph.nodes.end() && *it == next && i < j) graph.edges.emplace_back(i, j);
    }
  }
  return graph;
}

}  // namespace pesp
