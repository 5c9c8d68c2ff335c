#include "pesp/oracle.hpp"

#include "pesp/errors.hpp"
#include "pesp/parallel.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/zonotope.hpp"

#include <sstream>

namespace pesp {

std::optional<Solution> solve_exact(const PespInstance& inst, const CycleBasis& basis,
                                    const OracleCaps& caps) {
  const auto points = box_lattice_points(cycle_box(inst, basis), caps.max_width);
  const auto solved = parallel_map<std::optional<FixedOffsetResult>>(
      points.size(), [&](std::size_t i) {
        return minimize_over_polytrope(
            inst, offset_from_cycle_offset(basis, inst.graph, points[i]));
      });
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (solved[i] && (!best || solved[i]->objective < solved[*best]->objective)) best = i;
  }
  if (!best) return std::nullopt;
  return solution_from_result(inst, basis, *solved[*best]);
}

std::optional<Solution> brute_force_timetable(const PespInstance& inst,
                                              const CycleBasis& basis,
                                              const OracleCaps& caps) {
  check_grid_caps(inst, caps.grid);
  const std::size_t n = inst.num_vertices();
  std::optional<Timetable> best_pi;
  std::int64_t best_value = 0;
  Timetable pi(n);
  for (;;) {
    const TensionAssignment ta = timetable_to_tension(inst, pi);
    if (ta.feasible()) {
      std::int64_t value = 0;
      for (ArcId a = 0; a < inst.num_arcs(); ++a) value += inst.weight[a] * ta.tension[a];
      if (!best_pi || value < best_value) {
        best_pi = pi;
        best_value = value;
      }
    }
    std::size_t v = 1;
    while (v < n && ++pi[v] == inst.period) pi[v++] = 0;
    if (v >= n) break;
  }
  if (!best_pi) return std::nullopt;
  return solution_from_timetable(inst, basis, *best_pi);
}

std::string describe(const std::optional<Solution>& s) {
  if (!s) return "infeasible";
  std::ostringstream out;
  auto list = [&](const char* name, const auto& v) {
    out << ' ' << name << '=';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  };
  out << "objective=" << s->objective;
  list("pi", s->timetable);
  list("x", s->tension);
  list("p", s->offset);
  list("z", s->cycle_offset);
  return out.str();
}

CrosscheckReport crosscheck(const PespInstance& inst, const CycleBasis& basis,
                            const OracleCaps& caps) {
  CrosscheckReport report;
  report.exact = solve_exact(inst, basis, caps);
  report.brute_force = brute_force_timetable(inst, basis, caps);
  bool ok = report.exact.has_value() == report.brute_force.has_value();
  if (ok && report.exact) {
    ok = report.exact->objective == report.brute_force->objective &&
         solution_consistent(inst, basis, *report.exact) &&
         solution_consistent(inst, basis, *report.brute_force);
  }
  if (!ok) {
    throw CrosscheckMismatch("exact: " + describe(report.exact) +
                             "\nbrute force: " + describe(report.brute_force) +
                             "\ninstance:\n" + to_text(inst));
  }
  return report;
}

}  // namespace pesp
