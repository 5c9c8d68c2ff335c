#include "pesp/fixed_offset.hpp"

#include "pesp/errors.hpp"
#include "pesp/polytrope.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace pesp {

namespace {

// Uncapacitated min-cost flow on the doubled graph by successive shortest
// paths with potentials. supply[v] = outflow - inflow required at v.
class MinCostFlow {
 public:
  MinCostFlow(const WeightedDigraph& g, std::vector<std::int64_t> supply)
      : g_(g), excess_(std::move(supply)), flow_(g.arcs.size(), 0) {}

  void solve(std::vector<std::int64_t> potential) {
    const std::size_t n = g_.num_vertices;
    for (;;) {
      std::vector<std::int64_t> dist(n, kUnreachable);
      std::vector<std::size_t> via(n, kNone);
      std::vector<bool> backward(n, false);
      using Entry = std::pair<std::int64_t, std::size_t>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
      for (std::size_t v = 0; v < n; ++v) {
        if (excess_[v] > 0) {
          dist[v] = 0;
          queue.push({0, v});
        }
      }
      if (queue.empty()) return;
      std::vector<bool> done(n, false);
      std::size_t sink = kNone;
      while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (done[v]) continue;
        done[v] = true;
        if (excess_[v] < 0) {
          sink = v;
          break;
        }
        for (std::size_t e = 0; e < g_.arcs.size(); ++e) {
          const WeightedArc& arc = g_.arcs[e];
          if (arc.from == v) {
            relax(e, arc.to, d + arc.weight + potential[v] - potential[arc.to], false,
                  dist, via, backward, queue);
          }
          if (arc.to == v && flow_[e] > 0) {
            relax(e, arc.from, d - arc.weight + potential[v] - potential[arc.from], true,
                  dist, via, backward, queue);
          }
        }
      }
      if (sink == kNone) throw std::logic_error("flow supplies are unbalanced");

      std::int64_t amount = -excess_[sink];
      std::size_t v = sink;
      while (via[v] != kNone) {
        const WeightedArc& arc = g_.arcs[via[v]];
        if (backward[v]) amount = std::min(amount, flow_[via[v]]);
        v = backward[v] ? arc.to : arc.from;
      }
      amount = std::min(amount, excess_[v]);
      excess_[v] -= amount;
      excess_[sink] += amount;
      for (std::size_t w = sink; via[w] != kNone;) {
        const WeightedArc& arc = g_.arcs[via[w]];
        flow_[via[w]] += backward[w] ? -amount : amount;
        w = backward[w] ? arc.to : arc.from;
      }
      const std::int64_t cut = dist[sink];
      for (std::size_t u = 0; u < n; ++u) potential[u] += std::min(dist[u], cut);
    }
  }

  const std::vector<std::int64_t>& flow() const { return flow_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  template <class Queue>
  static void relax(std::size_t e, std::size_t to, std::int64_t d, bool back,
                    std::vector<std::int64_t>& dist, std::vector<std::size_t>& via,
                    std::vector<bool>& backward, Queue& queue) {
    if (d >= dist[to]) return;
    dist[to] = d;
    via[to] = e;
    backward[to] = back;
    queue.push({d, to});
  }

  const WeightedDigraph& g_;
  std::vector<std::int64_t> excess_;
  std::vector<std::int64_t> flow_;
};

}  // namespace

std::optional<FixedOffsetResult> minimize_over_polytrope(
    const PespInstance& inst, const OffsetVector& p,
    const std::vector<std::int64_t>& weights) {
  const std::size_t n = inst.num_vertices();
  const WeightedDigraph g = kappa(inst, p);

  // Feasible potentials: distances from a virtual source joined to all.
  WeightedDigraph extended = g;
  extended.num_vertices = n + 1;
  for (std::size_t v = 0; v < n; ++v) extended.arcs.push_back({n, v, 0});
  auto start = bellman_ford(extended, n);
  if (!start) return std::nullopt;
  start->pop_back();

  // Objective sum_a w_a (pi_head - pi_tail) + const has vertex coefficients
  // c_v; the dual is a flow with outflow - inflow = c_v on kappa costs.
  std::vector<std::int64_t> supply(n, 0);
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    supply[inst.graph.arc(a).head] += weights[a];
    supply[inst.graph.arc(a).tail] -= weights[a];
  }
  MinCostFlow mcf(g, supply);
  mcf.solve(*start);

  // Optimal timetables are the feasible potentials of the residual graph.
  // pi_v = -dist(v -> 0) is the smallest one with pi_0 = 0; the shortest
  // path in-tree names the tight arcs.
  WeightedDigraph reversed;
  reversed.num_vertices = n;
  std::vector<std::size_t> origin;
  for (std::size_t e = 0; e < g.arcs.size(); ++e) {
    const WeightedArc& arc = g.arcs[e];
    reversed.arcs.push_back({arc.to, arc.from, arc.weight});
    origin.push_back(e);
    if (mcf.flow()[e] > 0) {
      reversed.arcs.push_back({arc.from, arc.to, -arc.weight});
      origin.push_back(e);
    }
  }
  std::vector<std::int64_t> dist(n, kUnreachable);
  std::vector<std::size_t> pred(n, static_cast<std::size_t>(-1));
  dist[0] = 0;
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (std::size_t k = 0; k < reversed.arcs.size(); ++k) {
      const WeightedArc& arc = reversed.arcs[k];
      if (dist[arc.from] == kUnreachable) continue;
      if (dist[arc.from] + arc.weight < dist[arc.to]) {
        dist[arc.to] = dist[arc.from] + arc.weight;
        pred[arc.to] = k;
        changed = true;
      }
    }
    if (!changed) break;
  }

  FixedOffsetResult result;
  result.offset = p;
  result.timetable = Timetable(n);
  for (std::size_t v = 0; v < n; ++v) result.timetable[v] = -dist[v];
  result.tension = Tension(inst.num_arcs());
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    const std::int64_t x = result.timetable[arc.head] - result.timetable[arc.tail] +
                           inst.period * p[a];
    if (x < inst.lower[a] || x > inst.upper[a]) {
      throw std::logic_error("flow solver produced an infeasible timetable");
    }
    result.tension[a] = x;
    result.objective += weights[a] * x;
  }
  for (std::size_t v = 1; v < n; ++v) {
    const ArcId a = origin[pred[v]] / 2;
    result.tight_structure.tree.push_back(a);
    if (result.tension[a] == inst.lower[a]) {
      result.tight_structure.lower.push_back(a);
    } else {
      result.tight_structure.upper.push_back(a);
    }
  }
  std::sort(result.tight_structure.tree.begin(), result.tight_structure.tree.end());
  std::sort(result.tight_structure.lower.begin(), result.tight_structure.lower.end());
  std::sort(result.tight_structure.upper.begin(), result.tight_structure.upper.end());
  return result;
}

std::optional<FixedOffsetResult> minimize_over_polytrope(const PespInstance& inst,
                                                         const OffsetVector& p) {
  return minimize_over_polytrope(inst, p, inst.weight);
}

Tension tension_from_structure(const PespInstance& inst, const SpanningTreeStructure& s,
                               const OffsetVector& p) {
  const Timetable pi = timetable_from_structure(inst, s, p);
  Tension x(inst.num_arcs());
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    x[a] = pi[arc.head] - pi[arc.tail] + inst.period * p[a];
  }
  return x;
}

void check_grid_caps(const PespInstance& inst, const GridCaps& caps) {
  if (inst.num_vertices() > caps.max_vertices) {
    throw EnumerationCapExceeded("timetable grid: vertex count", caps.max_vertices);
  }
  if (inst.period > caps.max_period) {
    throw EnumerationCapExceeded("timetable grid: period",
                                 static_cast<std::size_t>(caps.max_period));
  }
}

std::optional<FixedOffsetResult> brute_force_fixed_offset(
    const PespInstance& inst, const CycleBasis& basis, const OffsetVector& p,
    const std::vector<std::int64_t>& weights, const GridCaps& caps) {
  check_grid_caps(inst, caps);
  const std::size_t n = inst.num_vertices();
  const CycleOffset target = basis.cycle_offset(p);
  std::optional<FixedOffsetResult> best;
  Timetable pi(n);
  for (;;) {
    const TensionAssignment ta = timetable_to_tension(inst, pi);
    if (ta.feasible() && basis.cycle_offset(ta.offset) == target) {
      std::int64_t value = 0;
      for (ArcId a = 0; a < inst.num_arcs(); ++a) value += weights[a] * ta.tension[a];
      if (!best || value < best->objective) {
        best = FixedOffsetResult{pi, ta.tension, ta.offset, value, {}};
      }
    }
    std::size_t v = 1;
    while (v < n && ++pi[v] == inst.period) pi[v++] = 0;
    if (v >= n) break;
  }
  return best;
}

}  // namespace pesp
