#include "pesp/errors.hpp"
#include "pesp/oracle.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/render.hpp"
#include "pesp/report.hpp"
#include "pesp/search.hpp"
#include "pesp/zonotope.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pesp;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInfeasible = 2;
constexpr int kCapExceeded = 3;

struct GlobalOptions {
  std::string basis_tree = "auto";
  std::string root;
  std::size_t cap_width = 10000;
  bool json = false;
};

ArcSet parse_arc_list(const std::string& text) {
  ArcSet arcs;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long a = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      arcs.push_back(a);
    } catch (const std::exception&) {
      throw Error("--basis-tree expects 'auto' or comma-separated arc indices, got '" +
                  text + "'");
    }
  }
  return arcs;
}

CycleBasis make_basis(const PespInstance& inst, const GlobalOptions& opt) {
  if (opt.basis_tree == "auto") {
    return fundamental_cycle_basis(inst.graph, bfs_spanning_tree(inst.graph));
  }
  const ArcSet tree = parse_arc_list(opt.basis_tree);
  for (ArcId a : tree) {
    if (a >= inst.num_arcs()) throw NotASpanningTree("arc " + std::to_string(a) + " does not exist");
  }
  return fundamental_cycle_basis(inst.graph, tree);
}

VertexId resolve_root(const PespInstance& inst, const std::string& root) {
  if (root.empty()) return 0;
  if (auto v = inst.find_vertex(root)) return *v;
  throw Error("unknown vertex '" + root + "'");
}

// Zonotope commands need positive spans; fixed arcs are contracted first.
struct Prepared {
  PespInstance inst;
  CycleBasis basis;
  VertexId root = 0;
  bool contracted = false;
  std::int64_t objective_offset = 0;
};

Prepared prepare_for_zonotope(const PespInstance& original, const GlobalOptions& opt) {
  Prepared out;
  const VertexId root = resolve_root(original, opt.root);
  bool has_fixed = false;
  for (ArcId a = 0; a < original.num_arcs(); ++a) has_fixed |= original.span(a) == 0;
  if (!has_fixed) {
    out.inst = original;
    out.basis = make_basis(out.inst, opt);
    out.root = root;
    return out;
  }
  if (opt.basis_tree != "auto") {
    throw Error("--basis-tree must be 'auto' when the instance has fixed arcs");
  }
  Contraction c = contract_fixed_arcs(original);
  out.inst = std::move(c.instance);
  out.basis = make_basis(out.inst, opt);
  out.root = c.vertex_map[root];
  out.contracted = true;
  out.objective_offset = c.objective_offset;
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

struct SolveOptions {
  std::string file;
  std::string method = "tns";
  std::uint64_t seed = 0;
  std::size_t max_iter = 1000;
  std::size_t restarts = 1;
  std::string strategy = "best";
  bool sideways = false;
  bool no_tabu = false;
  std::string out;
  std::string trace;
};

int cmd_solve(const SolveOptions& so, const GlobalOptions& opt) {
  const PespInstance inst = read_instance_file(so.file);
  const CycleBasis basis = make_basis(inst, opt);
  std::optional<Solution> best;
  std::vector<TraceRecord> best_trace;

  if (so.method == "exact") {
    OracleCaps caps;
    caps.max_width = opt.cap_width;
    best = solve_exact(inst, basis, caps);
  } else {
    TnsConfig config;
    config.strategy = so.strategy == "first" ? Strategy::FirstImprovement
                                             : Strategy::BestImprovement;
    config.max_iterations = so.max_iter;
    config.tabu = !so.no_tabu;
    config.sideways = so.sideways;
    std::optional<std::string> failure;
    for (std::size_t r = 0; r < so.restarts; ++r) {
      config.seed = so.seed + r;
      Solution start;
      try {
        start = initial_solution(inst, basis, config.seed);
      } catch (const RetriesExhausted& e) {
        failure = e.what();
        continue;
      }
      TnsResult run = tns(inst, basis, start, config);
      if (!best || run.solution.objective < best->objective) {
        best = run.solution;
        best_trace = std::move(run.trace);
      }
    }
    if (!best && failure) {
      std::cerr << "error: " << *failure << '\n';
      return kInfeasible;
    }
    std::string trace_path = so.trace;
    if (trace_path.empty() && !so.out.empty()) trace_path = so.out + ".trace.jsonl";
    if (!trace_path.empty()) write_file(trace_path, trace_jsonl(best_trace));
  }

  if (!best) {
    std::cerr << "infeasible: no periodic timetable satisfies all bounds\n";
    return kInfeasible;
  }
  const std::string text = dump(solution_json(inst, basis, *best));
  if (!so.out.empty()) write_file(so.out, text);
  if (opt.json) {
    std::cout << text;
  } else {
    std::cout << "objective " << best->objective << '\n';
  }
  return kOk;
}

int cmd_analyze(const std::string& file, const std::string& out, const GlobalOptions& opt) {
  const Prepared prep = prepare_for_zonotope(read_instance_file(file), opt);
  ReportCaps caps;
  caps.max_width = opt.cap_width;
  Json report = analyze_json(prep.inst, prep.basis, prep.root, caps);
  report["contracted"] = prep.contracted;
  const std::string text = dump(report);
  if (!out.empty()) write_file(out, text);
  if (opt.json) {
    std::cout << text;
  } else {
    std::cout << "mu " << report["mu"].dump() << '\n';
    for (const char* key : {"num_spanning_trees", "width", "volume"}) {
      if (report.contains(key)) std::cout << key << ' ' << report[key].dump() << '\n';
    }
    if (report.contains("lattice_points")) {
      std::cout << "lattice_points " << report["lattice_points"].size() << '\n';
    }
    if (report.contains("validation")) {
      std::cout << "tiling_valid " << report["validation"]["ok"].dump() << '\n';
      std::cout << "duality_ok " << report["duality"]["ok"].dump() << '\n';
    }
  }
  if (report["partial"].get<bool>()) {
    std::cerr << "partial report: " << report["error"].get<std::string>() << '\n';
    return kCapExceeded;
  }
  return kOk;
}

int cmd_polytropes(const std::string& file, const std::string& out,
                   const GlobalOptions& opt) {
  const PespInstance inst = read_instance_file(file);
  const CycleBasis basis = make_basis(inst, opt);
  ReportCaps caps;
  caps.max_width = opt.cap_width;
  const Json report = polytropes_json(inst, basis, caps);
  const std::string text = dump(report);
  if (!out.empty()) write_file(out, text);
  if (opt.json) {
    std::cout << text;
  } else {
    for (const auto& p : report["polytropes"]) {
      std::cout << "z " << p["z"].dump() << " dimension " << p["dimension"].dump()
                << " optimum " << p["optimum"].dump() << '\n';
    }
    std::cout << "edges " << report["edges"].dump() << '\n';
  }
  return kOk;
}

int cmd_tile(const std::string& file, const std::string& out, const GlobalOptions& opt) {
  const Prepared prep = prepare_for_zonotope(read_instance_file(file), opt);
  ReportCaps caps;
  caps.max_width = opt.cap_width;
  const Json tiles = tiling_json(prep.inst, prep.basis, prep.root, caps);
  const Json report{{"root", prep.inst.vertex_name(prep.root)}, {"tiles", tiles}};
  const std::string text = dump(report);
  if (!out.empty()) write_file(out, text);
  if (opt.json) {
    std::cout << text;
  } else {
    for (const auto& t : tiles) {
      std::cout << "tree " << t["tree"].dump() << " L " << t["L"].dump() << " U "
                << t["U"].dump() << " lattice_point " << t["lattice_point"].dump() << '\n';
    }
  }
  return kOk;
}

int cmd_render(const std::string& file, const std::string& kind, const std::string& out,
               const GlobalOptions& opt) {
  std::string svg;
  if (kind == "torus") {
    const PespInstance inst = read_instance_file(file);
    svg = render_torus_svg(inst, make_basis(inst, opt), opt.cap_width);
  } else {
    const Prepared prep = prepare_for_zonotope(read_instance_file(file), opt);
    svg = render_zonotope_svg(prep.inst, prep.basis, prep.root, opt.cap_width);
  }
  if (out.empty()) {
    std::cout << svg;
  } else {
    write_file(out, svg);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic event scheduling: solve, analyze, tile and render instances"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opt;
  app.add_option("--basis-tree", opt.basis_tree,
                 "Spanning tree of the fundamental cycle basis: 'auto' or arc indices "
                 "like 0,2")
      ->capture_default_str();
  app.add_option("--root", opt.root, "Vertex for tilings and tropical vertices");
  app.add_option("--cap-width", opt.cap_width, "Largest cycle box width to enumerate")
      ->capture_default_str();
  app.add_flag("--json", opt.json, "Print the JSON document to stdout");

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Find a timetable");
  solve->add_option("file", so.file, "Instance file")->required();
  solve->add_option("--method", so.method, "tns or exact")
      ->check(CLI::IsMember({"tns", "exact"}))
      ->capture_default_str();
  solve->add_option("--seed", so.seed, "Seed of the first start")->capture_default_str();
  solve->add_option("--max-iter", so.max_iter, "Move cap per search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--restarts", so.restarts, "Independent starts with seeds seed, seed+1, ...")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--strategy", so.strategy, "best or first improvement")
      ->check(CLI::IsMember({"best", "first"}))
      ->capture_default_str();
  solve->add_flag("--sideways", so.sideways, "Accept equally good unvisited neighbours");
  solve->add_flag("--no-tabu", so.no_tabu, "Allow revisiting cycle offsets");
  solve->add_option("--out", so.out, "Solution JSON file");
  solve->add_option("--trace", so.trace, "Search trace file (JSON lines)");

  std::string file;
  std::string out;
  std::string kind = "torus";
  auto* analyze = app.add_subcommand("analyze", "Zonotope, width, tiling and duality report");
  auto* polytropes = app.add_subcommand("polytropes", "List nonempty polytropes");
  auto* tile = app.add_subcommand("tile", "Fine zonotopal tiling for --root");
  auto* render = app.add_subcommand("render", "SVG of the torus or the zonotope");
  for (auto* sub : {analyze, polytropes, tile, render}) {
    sub->add_option("file", file, "Instance file")->required();
    sub->add_option("--out", out, "Output file");
  }
  render->add_option("--kind", kind, "torus or zonotope")
      ->check(CLI::IsMember({"torus", "zonotope"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(so, opt);
    if (*analyze) return cmd_analyze(file, out, opt);
    if (*polytropes) return cmd_polytropes(file, out, opt);
    if (*tile) return cmd_tile(file, out, opt);
    return cmd_render(file, kind, out, opt);
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const RetriesExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
