#include "pesp/instance.hpp"

#include "pesp/errors.hpp"
#include "pesp/exact.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace pesp {

std::optional<VertexId> PespInstance::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertex_names.size(); ++v) {
    if (vertex_names[v] == name) return v;
  }
  return std::nullopt;
}

std::string PespInstance::vertex_name(VertexId v) const {
  return v < vertex_names.size() ? vertex_names[v] : std::to_string(v);
}

ValidationReport validate(const PespInstance& inst) {
  ValidationReport report;
  const std::int64_t t = inst.period;
  if (t <= 0) report.push_back({std::nullopt, "period not positive"});
  if (!inst.graph.connected()) report.push_back({std::nullopt, "graph disconnected"});
  const std::size_t m = inst.num_arcs();
  if (inst.lower.size() != m || inst.upper.size() != m || inst.weight.size() != m) {
    report.push_back({std::nullopt, "bound or weight vector has wrong length"});
    return report;
  }
  for (ArcId a = 0; a < m; ++a) {
    if (inst.lower[a] < 0) report.push_back({a, "lower bound negative"});
    if (t > 0 && inst.lower[a] >= t) report.push_back({a, "lower bound not < T"});
    const std::int64_t span = inst.upper[a] - inst.lower[a];
    if (span < 0) report.push_back({a, "upper bound below lower bound"});
    if (t > 0 && (inst.relaxed ? span > t : span >= t)) {
      report.push_back({a, inst.relaxed ? "span exceeds T" : "span not < T"});
    }
    if (inst.weight[a] < 0) report.push_back({a, "negative weight"});
  }
  return report;
}

namespace {

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

PespInstance parse_instance(std::istream& in) {
  std::optional<std::int64_t> period;
  std::vector<std::string> names;
  std::map<std::string, VertexId> index;
  std::vector<Arc> arcs;
  PespInstance inst;

  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    index.emplace(name, names.size());
    names.push_back(name);
    return names.size() - 1;
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "PERIOD") {
      if (tok.size() != 2) throw ParseError(line, "PERIOD takes one integer");
      if (period) throw ParseError(line, "duplicate PERIOD");
      period = parse_int(tok[1], line);
      if (*period <= 0) throw ParseError(line, "period must be positive");
    } else if (kw == "EVENT") {
      if (tok.size() != 2) throw ParseError(line, "EVENT takes one id");
      if (index.count(tok[1])) throw ParseError(line, "duplicate EVENT " + tok[1]);
      vertex(tok[1]);
    } else if (kw == "ARC") {
      if (tok.size() != 6) {
        throw ParseError(line, "ARC takes <tail> <head> <lower> <upper> <weight>");
      }
      if (tok[1] == tok[2]) throw ParseError(line, "self-loop on " + tok[1]);
      const std::int64_t lo = parse_int(tok[3], line);
      const std::int64_t up = parse_int(tok[4], line);
      const std::int64_t w = parse_int(tok[5], line);
      VertexId t = vertex(tok[1]);
      VertexId h = vertex(tok[2]);
      arcs.push_back({t, h});
      inst.lower.push_back(lo);
      inst.upper.push_back(up);
      inst.weight.push_back(w);
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  if (!period) throw ParseError(line, "missing PERIOD");
  inst.period = *period;
  inst.graph = Digraph(names.size(), std::move(arcs));
  inst.vertex_names = std::move(names);

  for (const Violation& v : validate(inst)) {
    if (v.arc) throw InvalidBounds(*v.arc, v.message);
    if (v.message == "graph disconnected") throw DisconnectedGraph();
    throw ParseError(line, v.message);
  }
  return inst;
}

PespInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

PespInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const PespInstance& inst) {
  out << "PERIOD " << inst.period << '\n';
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    out << "EVENT " << inst.vertex_name(v) << '\n';
  }
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    out << "ARC " << inst.vertex_name(arc.tail) << ' ' << inst.vertex_name(arc.head)
        << ' ' << inst.lower[a] << ' ' << inst.upper[a] << ' ' << inst.weight[a]
        << '\n';
  }
}

std::string to_text(const PespInstance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Contraction contract_fixed_arcs(const PespInstance& inst) {
  const std::size_t n = inst.num_vertices();
  const std::size_t m = inst.num_arcs();
  const std::int64_t t = inst.period;
  auto fixed = [&](ArcId a) { return inst.lower[a] == inst.upper[a]; };

  constexpr VertexId kUnset = static_cast<VertexId>(-1);
  Contraction c;
  c.vertex_map.assign(n, kUnset);
  c.vertex_shift.assign(n, 0);
  c.arc_map.assign(m, std::nullopt);
  std::vector<bool> forest(m, false);
  std::vector<std::string> names;

  // Fixed arcs pin pi_head - pi_tail = lower; propagate shifts from the
  // smallest vertex of every fixed component.
  for (VertexId root = 0; root < n; ++root) {
    if (c.vertex_map[root] != kUnset) continue;
    const VertexId id = names.size();
    names.push_back(inst.vertex_name(root));
    c.vertex_map[root] = id;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (ArcId a : inst.graph.incident(v)) {
        if (!fixed(a)) continue;
        const Arc& arc = inst.graph.arc(a);
        VertexId w = arc.tail == v ? arc.head : arc.tail;
        if (c.vertex_map[w] != kUnset) continue;
        c.vertex_map[w] = id;
        c.vertex_shift[w] = c.vertex_shift[v] +
                            (arc.tail == v ? inst.lower[a] : -inst.lower[a]);
        forest[a] = true;
        queue.push_back(w);
      }
    }
  }

  std::vector<Arc> arcs;
  PespInstance& out = c.instance;
  out.period = t;
  for (ArcId a = 0; a < m; ++a) {
    const Arc& arc = inst.graph.arc(a);
    const VertexId ci = c.vertex_map[arc.tail];
    const VertexId cj = c.vertex_map[arc.head];
    const std::int64_t d = c.vertex_shift[arc.head] - c.vertex_shift[arc.tail];
    if (forest[a]) {
      c.objective_offset += inst.weight[a] * inst.lower[a];
      continue;
    }
    if (ci == cj) {
      // A loop: its tension is d modulo T, pinned inside [lower, upper].
      const std::int64_t x = inst.lower[a] + mod_floor(d - inst.lower[a], t);
      if (x > inst.upper[a]) throw InfeasibleFixedCycle(a);
      c.objective_offset += inst.weight[a] * x;
      continue;
    }
    const std::int64_t lo = mod_floor(inst.lower[a] - d, t);
    c.arc_map[a] = arcs.size();
    arcs.push_back({ci, cj});
    out.lower.push_back(lo);
    out.upper.push_back(lo + inst.span(a));
    out.weight.push_back(inst.weight[a]);
    c.objective_offset += inst.weight[a] * (inst.lower[a] - lo);
  }
  out.graph = Digraph(names.size(), std::move(arcs));
  out.vertex_names = std::move(names);
  return c;
}

PespInstance limit_instance(const PespInstance& inst) {
  PespInstance out = inst;
  for (ArcId a = 0; a < out.num_arcs(); ++a) out.upper[a] = out.lower[a] + out.period;
  out.relaxed = true;
  return out;
}

}  // namespace pesp
