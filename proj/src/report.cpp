#include "pesp/report.hpp"

#include "pesp/errors.hpp"
#include "pesp/fixed_offset.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/zonotope.hpp"

#include <sstream>

namespace pesp {

namespace {

template <class Vec>
Json int_array(const Vec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

Json big(const BigInt& b) {
  if (b <= std::numeric_limits<std::int64_t>::max() &&
      b >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(b);
  }
  return to_string(b);
}

Json scaled_array(const std::vector<std::int64_t>& v, std::int64_t period) {
  Json out = Json::array();
  for (auto x : v) out.push_back(to_string(make_rational(x, period)));
  return out;
}

Json basis_json(const CycleBasis& basis) {
  Json out = Json::array();
  for (const auto& c : basis.cycles()) out.push_back(int_array(c.signature));
  return out;
}

Json timetable_json(const PespInstance& inst, const Timetable& pi) {
  Json out = Json::object();
  for (VertexId v = 0; v < inst.num_vertices(); ++v) out[inst.vertex_name(v)] = pi[v];
  return out;
}

Json tile_json(const Tile& tile, std::int64_t period) {
  Json t;
  t["tree"] = int_array(tile.structure.tree);
  t["L"] = int_array(tile.structure.lower);
  t["U"] = int_array(tile.structure.upper);
  t["translation"] = scaled_array(tile.translation, period);
  Json gens = Json::array();
  for (const auto& g : tile.generators) gens.push_back(scaled_array(g, period));
  t["generators"] = gens;
  t["lattice_point"] = tile.lattice_point ? int_array(*tile.lattice_point) : Json();
  return t;
}

Json bound_chain_json(const WidthBoundReport& r) {
  Json b;
  b["min_span"] = r.min_span;
  Json spans = Json::array();
  for (const auto& s : r.cycle_spans) spans.push_back(to_string(s));
  b["cycle_spans"] = spans;
  b["tree_bound"] = to_string(r.tree_bound);
  b["volume"] = to_string(r.volume);
  b["box_volume"] = to_string(r.box_volume);
  b["rounded_bound"] = to_string(r.rounded_bound);
  b["exponential_bound"] = to_string(r.exponential_bound);
  b["cycle_length_product"] = big(r.cycle_length_product);
  b["tree_bound_holds"] = r.tree_bound_holds;
  b["volume_bound_holds"] = r.volume_bound_holds;
  b["box_bound_holds"] = r.box_bound_holds;
  b["rounded_bound_holds"] = r.rounded_bound_holds;
  b["strict_bound_vacuous"] = r.strict_bound_vacuous;
  b["trees_bound_holds"] = r.trees_bound_holds;
  b["empty_cycle"] = r.empty_cycle ? Json(*r.empty_cycle) : Json();
  b["holds"] = r.holds();
  return b;
}

}  // namespace

Json solution_json(const PespInstance& inst, const CycleBasis& basis, const Solution& s) {
  Json j;
  j["period"] = inst.period;
  j["objective"] = s.objective;
  j["timetable"] = timetable_json(inst, s.timetable);
  Json tension = Json::object();
  for (ArcId a = 0; a < s.tension.size(); ++a) tension[std::to_string(a)] = s.tension[a];
  j["tension"] = tension;
  j["periodic_offset"] = int_array(s.offset);
  j["cycle_offset"] = int_array(s.cycle_offset);
  j["basis"] = basis_json(basis);
  return j;
}

std::string trace_jsonl(const std::vector<TraceRecord>& trace) {
  std::string out;
  for (const TraceRecord& r : trace) {
    Json j;
    j["z"] = int_array(r.z);
    j["objective"] = r.objective;
    switch (r.kind) {
      case TraceRecord::Kind::Start:
        j["move"] = nullptr;
        break;
      case TraceRecord::Kind::Reoptimize:
        j["move"] = "reoptimize";
        break;
      case TraceRecord::Kind::Move:
        j["move"] = Json{{"arc", r.arc}, {"sign", r.sign}};
        break;
    }
    out += j.dump() + '\n';
  }
  return out;
}

Json tiling_json(const PespInstance& inst, const CycleBasis& basis, VertexId root,
                 const ReportCaps& caps) {
  Json out = Json::array();
  for (const Tile& t : fine_tiling(inst, basis, root, caps.max_width, caps.max_trees)) {
    out.push_back(tile_json(t, inst.period));
  }
  return out;
}

Json analyze_json(const PespInstance& inst, const CycleBasis& basis, VertexId root,
                  const ReportCaps& caps) {
  Json j;
  j["mu"] = basis.size();
  j["root"] = inst.vertex_name(root);
  j["basis"] = basis_json(basis);
  j["partial"] = false;
  try {
    j["num_spanning_trees"] = big(count_spanning_trees_determinant(inst.graph));
    const CycleBox box = cycle_box(inst, basis);
    Json box_json = Json::array();
    for (std::size_t k = 0; k < box.dimension(); ++k) {
      box_json.push_back({{"lower", to_string(box.lower_bound(k))},
                          {"upper", to_string(box.upper_bound(k))}});
    }
    j["box"] = box_json;
    j["width"] = big(width(inst, basis));
    j["width_factors"] = int_array(width_factors(inst, basis));
    j["volume"] = to_string(volume(inst, basis, caps.max_trees));
    Json points = Json::array();
    for (const auto& z : lattice_points(inst, basis, caps.max_width)) {
      points.push_back(int_array(z));
    }
    j["lattice_points"] = points;
    j["bound_chain"] = bound_chain_json(width_bound_report(inst, basis, caps.max_trees));

    const auto tiles = fine_tiling(inst, basis, root, caps.max_width, caps.max_trees);
    Json tiling = Json::array();
    for (const Tile& t : tiles) tiling.push_back(tile_json(t, inst.period));
    j["tiling"] = tiling;

    const TilingReport v = validate_tiling(inst, basis, tiles, caps.max_width, caps.max_trees);
    Json incidences = Json::array();
    for (const auto& [tile, z] : v.incidences) {
      incidences.push_back({{"tile", tile}, {"z", int_array(z)}});
    }
    j["validation"] = {{"nonsingular", v.nonsingular},
                       {"determinant_sum", to_string(v.determinant_sum)},
                       {"volume_matches", v.volume_matches},
                       {"contained", v.contained},
                       {"lattice_covered", v.lattice_covered},
                       {"at_most_one_point", v.at_most_one_point},
                       {"incidences", incidences},
                       {"ok", v.ok()}};

    const DualityReport d = duality_check(inst, basis, root, tiles);
    Json entries = Json::array();
    for (const DualityEntry& e : d.entries) {
      entries.push_back({{"tile", e.tile},
                         {"z", int_array(e.z)},
                         {"vertex", timetable_json(inst, e.structure_vertex)},
                         {"feasible", e.feasible},
                         {"matches", e.matches}});
    }
    j["duality"] = {{"ok", d.ok()}, {"entries", entries}};
  } catch (const EnumerationCapExceeded& e) {
    j["partial"] = true;
    j["error"] = e.what();
  }
  return j;
}

Json polytropes_json(const PespInstance& inst, const CycleBasis& basis,
                     const ReportCaps& caps) {
  Json list = Json::array();
  for (const Polytrope& poly : enumerate_polytropes(inst, basis, caps.max_width)) {
    Json p;
    p["z"] = int_array(poly.cycle_offset);
    p["offset"] = int_array(poly.offset);
    p["dimension"] = poly.dimension;
    Json vertices = Json::array();
    for (const Timetable& t : tropical_vertices(poly)) vertices.push_back(int_array(t));
    p["tropical_vertices"] = vertices;
    p["optimum"] = minimize_over_polytrope(inst, poly.offset)->objective;
    const NeighbourDiagnostic diag = neighbour_diagnostic(inst, basis, poly.cycle_offset);
    Json nb = Json::array();
    for (const auto& z : diag.column_test) nb.push_back(int_array(z));
    p["neighbors"] = nb;
    p["facet_test_diverges"] = diag.diverges();
    list.push_back(p);
  }
  Json edges = Json::array();
  for (const auto& [i, k] : neighbourhood_graph(inst, basis, caps.max_width).edges) {
    edges.push_back({i, k});
  }
  return Json{{"mu", basis.size()}, {"polytropes", list}, {"edges", edges}};
}

std::string dump(const Json& j) { return j.dump(2) + '\n'; }

}  // namespace pesp
