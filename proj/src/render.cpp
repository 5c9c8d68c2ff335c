#include "pesp/render.hpp"

#include "pesp/errors.hpp"
#include "pesp/polytrope.hpp"
#include "pesp/zonotope.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <sstream>

namespace pesp {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
    "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
};
constexpr const char* kPointColor = "#f28e2b";

using Point = PlanePoint;
using Polygon = std::vector<Point>;

// a x + b y <= c
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
};

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  Polygon out;
  auto value = [&](const Point& p) { return h.a * p.x + h.b * p.y - h.c; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& cur = poly[i];
    const Point& next = poly[(i + 1) % poly.size()];
    const Rational vc = value(cur);
    const Rational vn = value(next);
    if (vc <= 0) out.push_back(cur);
    if ((vc < 0 && vn > 0) || (vc > 0 && vn < 0)) {
      const Rational t = vc / (vc - vn);
      out.push_back({cur.x + t * (next.x - cur.x), cur.y + t * (next.y - cur.y)});
    }
  }
  return out;
}

Rational twice_area(const Polygon& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s < 0 ? Rational(-s) : s;
}

std::string num(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", d);
  return buf;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Maps data coordinates into a square drawing area with y pointing up.
struct Canvas {
  Rational x_min, x_max, y_min, y_max;
  double size = 480;
  double margin = 40;

  double sx(const Rational& x) const {
    return margin + static_cast<double>((x - x_min) / (x_max - x_min)) * size;
  }
  double sy(const Rational& y) const {
    return margin + static_cast<double>((y_max - y) / (y_max - y_min)) * size;
  }
  std::string header() const {
    const std::string full = num(size + 2 * margin);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + full + "\" height=\"" +
           full + "\" viewBox=\"0 0 " + full + " " + full + "\">\n" +
           "<rect x=\"0\" y=\"0\" width=\"" + full + "\" height=\"" + full +
           "\" fill=\"white\"/>\n";
  }
  std::string polygon(const Polygon& poly, const std::string& style) const {
    std::string pts;
    for (const Point& p : poly) {
      if (!pts.empty()) pts += ' ';
      pts += num(sx(p.x)) + "," + num(sy(p.y));
    }
    return "<polygon points=\"" + pts + "\" " + style + "/>\n";
  }
  std::string text(const Rational& x, const Rational& y, const std::string& s,
                   double dy = 0) const {
    return "<text x=\"" + num(sx(x)) + "\" y=\"" + num(sy(y) + dy) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + s +
           "</text>\n";
  }
  std::string dot(const Rational& x, const Rational& y) const {
    return "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"5\" fill=\"" +
           kPointColor + "\" stroke=\"black\"/>\n";
  }
};

}  // namespace

std::vector<PlanePoint> polytrope_polygon(const PespInstance& inst, const Polytrope& poly) {
  if (inst.num_vertices() != 3) {
    throw UnsupportedDimension("plane sections need exactly 3 events, got " +
                               std::to_string(inst.num_vertices()));
  }
  if (poly.empty()) throw EmptyPolytrope();
  const IntMatrix& dist = *poly.dist;
  // pi_v ranges over [-dist(v,0), dist(0,v)] given pi_0 = 0.
  Polygon region = {{-dist[1][0], -dist[2][0]},
                    {dist[0][1], -dist[2][0]},
                    {dist[0][1], dist[0][2]},
                    {-dist[1][0], dist[0][2]}};
  for (ArcId a = 0; a < inst.num_arcs(); ++a) {
    const Arc& arc = inst.graph.arc(a);
    // pi_head - pi_tail within [lower - T p, upper - T p].
    Rational ax = 0;
    Rational ay = 0;
    if (arc.head == 1) ax += 1;
    if (arc.head == 2) ay += 1;
    if (arc.tail == 1) ax -= 1;
    if (arc.tail == 2) ay -= 1;
    const std::int64_t shift = inst.period * poly.offset[a];
    region = clip(region, {ax, ay, Rational(inst.upper[a] - shift)});
    region = clip(region, {-ax, -ay, Rational(shift - inst.lower[a])});
  }
  Polygon out;
  for (const Point& p : region) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  for (bool changed = true; changed && out.size() > 2;) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Point& a = out[(i + out.size() - 1) % out.size()];
      const Point& b = out[i];
      const Point& c = out[(i + 1) % out.size()];
      if ((b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x)) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

std::string render_torus_svg(const PespInstance& inst, const CycleBasis& basis,
                             std::size_t cap_width) {
  if (inst.num_vertices() != 3) {
    throw UnsupportedDimension("torus rendering needs exactly 3 events, got " +
                               std::to_string(inst.num_vertices()));
  }
  const std::int64_t t = inst.period;
  const Rational tr(t);
  Canvas canvas{0, tr, 0, tr};
  std::ostringstream svg;
  svg << canvas.header();
  svg << canvas.polygon({{0, 0}, {tr, 0}, {tr, tr}, {0, tr}},
                        "fill=\"#eeeeee\" stroke=\"black\"");

  const auto polys = enumerate_polytropes(inst, basis, cap_width);
  std::ostringstream labels;
  for (std::size_t idx = 0; idx < polys.size(); ++idx) {
    const Polytrope& poly = polys[idx];
    const Polygon region = polytrope_polygon(inst, poly);
    if (region.empty()) continue;
    Rational lo_x = region[0].x, hi_x = region[0].x, lo_y = region[0].y, hi_y = region[0].y;
    for (const Point& p : region) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    const std::string style = std::string("fill=\"") + kPalette[idx % kPalette.size()] +
                              "\" stroke=\"black\" stroke-width=\"1\"";
    for (std::int64_t q1 = static_cast<std::int64_t>(floor(-hi_x / tr));
         q1 <= static_cast<std::int64_t>(ceil((tr - lo_x) / tr)); ++q1) {
      for (std::int64_t q2 = static_cast<std::int64_t>(floor(-hi_y / tr));
           q2 <= static_cast<std::int64_t>(ceil((tr - lo_y) / tr)); ++q2) {
        Polygon piece;
        for (const Point& p : region) piece.push_back({p.x + tr * q1, p.y + tr * q2});
        piece = clip(piece, {-1, 0, 0});
        piece = clip(piece, {1, 0, tr});
        piece = clip(piece, {0, -1, 0});
        piece = clip(piece, {0, 1, tr});
        if (piece.empty()) continue;
        // Full-dimensional regions touching the square only along its border.
        if (twice_area(piece) == 0 && poly.dimension == 2) continue;
        svg << canvas.polygon(piece, style);
        if (twice_area(piece) == 0) continue;
        // Shifting pi by T q changes the offset of arc (i, j) by q_i - q_j.
        const std::array<std::int64_t, 3> q = {0, q1, q2};
        std::vector<std::int64_t> offset(inst.num_arcs());
        for (ArcId a = 0; a < inst.num_arcs(); ++a) {
          const Arc& arc = inst.graph.arc(a);
          offset[a] = poly.offset[a] + q[arc.tail] - q[arc.head];
        }
        Rational cx = 0;
        Rational cy = 0;
        for (const Point& p : piece) {
          cx += p.x;
          cy += p.y;
        }
        cx /= static_cast<std::int64_t>(piece.size());
        cy /= static_cast<std::int64_t>(piece.size());
        labels << canvas.text(cx, cy, join(offset, " "), 4);
      }
    }
  }
  svg << labels.str();
  svg << canvas.text(tr / 2, 0, inst.vertex_name(1), 28);
  svg << canvas.text(0, tr / 2, inst.vertex_name(2), 0);
  svg << "</svg>\n";
  return svg.str();
}

std::string render_zonotope_svg(const PespInstance& inst, const CycleBasis& basis,
                                VertexId root, std::size_t cap_width) {
  const std::size_t mu = basis.size();
  if (mu > 2) {
    throw UnsupportedDimension("zonotope rendering needs at most 2 cycles, got " +
                               std::to_string(mu));
  }
  const std::int64_t t = inst.period;
  const auto tiles = fine_tiling(inst, basis, root, cap_width);
  const auto points = lattice_points(inst, basis, cap_width);
  const CycleBox box = cycle_box(inst, basis);
  auto coord = [&](const std::vector<std::int64_t>& v, std::size_t k) {
    return k < v.size() ? make_rational(v[k], t) : Rational(0);
  };

  Rational x_lo = mu > 0 ? box.lower_bound(0) : Rational(-1);
  Rational x_hi = mu > 0 ? box.upper_bound(0) : Rational(1);
  Rational y_lo = mu > 1 ? box.lower_bound(1) : x_lo;
  Rational y_hi = mu > 1 ? box.upper_bound(1) : x_hi;
  if (mu == 1) {
    y_lo = -(x_hi - x_lo) / 2;
    y_hi = (x_hi - x_lo) / 2;
  }
  const Rational pad_x = (x_hi - x_lo) / 10 + Rational(1, 10);
  const Rational pad_y = (y_hi - y_lo) / 10 + Rational(1, 10);
  Canvas canvas{x_lo - pad_x, x_hi + pad_x, y_lo - pad_y, y_hi + pad_y};
  std::ostringstream svg;
  svg << canvas.header();

  std::set<Rational> breakpoints;
  if (mu == 2) {
    svg << canvas.polygon({{x_lo, y_lo}, {x_hi, y_lo}, {x_hi, y_hi}, {x_lo, y_hi}},
                          "fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"");
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const Tile& tile = tiles[i];
    const std::string style = std::string("fill=\"") + kPalette[i % kPalette.size()] +
                              "\" stroke=\"black\" stroke-width=\"1\"";
    if (mu == 2) {
      const auto& g = tile.generators;
      Polygon poly;
      for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
        poly.push_back({coord(tile.translation, 0) + a * coord(g[0], 0) + b * coord(g[1], 0),
                        coord(tile.translation, 1) + a * coord(g[0], 1) + b * coord(g[1], 1)});
      }
      svg << canvas.polygon(poly, style);
    } else if (mu == 1) {
      const Rational a = coord(tile.translation, 0);
      const Rational b = a + coord(tile.generators[0], 0);
      const Rational h = (y_hi - y_lo) / 8;
      svg << canvas.polygon({{a, -h}, {b, -h}, {b, h}, {a, h}}, style);
      breakpoints.insert(a);
      breakpoints.insert(b);
    }
  }
  for (const Rational& b : breakpoints) {
    svg << canvas.text(b, -(y_hi - y_lo) / 8, to_string(b), 16);
  }
  for (const CycleOffset& z : points) {
    const Rational x = mu > 0 ? Rational(z[0]) : Rational(0);
    const Rational y = mu > 1 ? Rational(z[1]) : Rational(0);
    svg << canvas.dot(x, y);
    svg << canvas.text(x, y, join(z.values(), " "), -10);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pesp
