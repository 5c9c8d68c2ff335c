#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/instance.hpp"
#include "pesp/polytrope.hpp"

#include <string>
#include <vector>

namespace pesp {

struct PlanePoint {
  Rational x;
  Rational y;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Corners of a nonempty polytrope of a 3-event instance in the plane
// pi_0 = 0 with coordinates (pi_1, pi_2), counter-clockwise, without repeated
// or collinear points. Throws UnsupportedDimension or EmptyPolytrope.
std::vector<PlanePoint> polytrope_polygon(const PespInstance& inst, const Polytrope& poly);

// Fundamental domain [0,T]^2 of a 3-event instance with pi_0 = 0: every
// nonempty polytrope and its period translates, clipped to the square and
// labelled with their offset vectors. Throws UnsupportedDimension otherwise.
std::string render_torus_svg(const PespInstance& inst, const CycleBasis& basis,
                             std::size_t cap_width);

// Cycle offset zonotope for mu <= 2 with the fine tiling for `root` and the
// feasible lattice points. Throws UnsupportedDimension for mu > 2.
std::string render_zonotope_svg(const PespInstance& inst, const CycleBasis& basis,
                                VertexId root, std::size_t cap_width);

}  // namespace pesp
