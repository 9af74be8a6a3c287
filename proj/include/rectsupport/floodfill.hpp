#pragma once

#include <optional>

#include "rectsupport/geometry.hpp"

namespace rectsupport {

/// Axis-parallel polyline used by the region oracle: an L-shape, or a bare
/// vertical segment. Segments are closed.
struct OrthoPolyline {
  struct HSeg {
    Coord y, x1, x2;  // x1 <= x2
  };
  struct VSeg {
    Coord x, y1, y2;  // y1 <= y2
  };
  std::optional<HSeg> h;
  std::optional<VSeg> v;

  static OrthoPolyline from_shape(const LShape& s);
  static OrthoPolyline vertical(Coord x, Coord y1, Coord y2);
};

/// Region-connectivity oracle for discrete piercing: cuts r along the
/// polyline on a small compressed grid, floods the resulting cells, and
/// reports true iff r splits into exactly two faces that each contain an
/// instance point.
bool floodfill_discretely_pierces(const OrthoPolyline& poly, const Rect& r,
                                  const Instance& inst);

bool floodfill_discretely_pierces(const LEdge& e, const Rect& r,
                                  const Instance& inst);

}  // namespace rectsupport
