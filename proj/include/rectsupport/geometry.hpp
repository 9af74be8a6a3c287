#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rectsupport {

using Coord = std::int64_t;
using PointId = std::int32_t;
using RectId = std::int32_t;

struct Point {
  PointId id = -1;
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
  RectId id = -1;
  Coord x_lo = 0;
  Coord y_lo = 0;
  Coord x_hi = 0;
  Coord y_hi = 0;

  bool contains(Coord px, Coord py) const {
    return x_lo < px && px < x_hi && y_lo < py && py < y_hi;
  }
  bool contains(const Point& p) const { return contains(p.x, p.y); }
  Coord width() const { return x_hi - x_lo; }
  Coord height() const { return y_hi - y_lo; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// L-shaped edge between two instance points; `from` is the endpoint with
/// the smaller x. Drawn as the horizontal segment at y(from) from x(from)
/// to x(to), followed by the vertical segment at x(to).
struct LEdge {
  PointId from = -1;
  PointId to = -1;

  friend auto operator<=>(const LEdge&, const LEdge&) = default;
};

struct Instance {
  std::vector<Point> points;
  std::vector<Rect> rects;
  std::string label;

  int n() const { return static_cast<int>(points.size()); }
  int m() const { return static_cast<int>(rects.size()); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Concrete drawing of an L-edge.
struct LShape {
  Coord x_from = 0;
  Coord y_from = 0;
  Coord x_to = 0;
  Coord y_to = 0;

  Coord h_y() const { return y_from; }
  Coord v_x() const { return x_to; }
  Coord v_y_min() const { return y_from < y_to ? y_from : y_to; }
  Coord v_y_max() const { return y_from < y_to ? y_to : y_from; }
  Coord corner_x() const { return x_to; }
  Coord corner_y() const { return y_from; }
};

enum class LBend { up_left, left_up };

LShape shape_of(const Point& from, const Point& to);
LShape shape_of(const Instance& inst, const LEdge& e);
LBend bend_of(const LShape& s);

// ---- general position ------------------------------------------------

enum class ViolationKind {
  point_point_x_tie,
  point_point_y_tie,
  side_side_tie,
  point_on_boundary,
  rect_sides_reversed,
};

struct Violation {
  ViolationKind kind;
  char axis;  // 'x' or 'y'
  std::int32_t a;  // point or rect id, depending on kind
  std::int32_t b;
  Coord value;
};

std::vector<Violation> validate_general_position(const Instance& inst);
std::string to_string(const Violation& v);

/// Remaps x-coordinates (points and rectangle sides jointly) by rank to
/// distinct integers, ties broken deterministically from (kind, id, seed);
/// same for y. Order of distinct coordinates is preserved.
Instance perturb_to_general_position(const Instance& inst, std::uint64_t seed);

// ---- predicates --------------------------------------------------------

/// True iff one rectangle's x-projection nests strictly inside the other's
/// while the y-projections nest strictly the opposite way.
bool rect_pierces(const Rect& a, const Rect& b);

/// Directed form: removing b from a leaves two parts, with b the one that
/// spans a horizontally. a "is less than" b in the piercing order.
bool pierce_less(const Rect& a, const Rect& b);

std::optional<std::pair<RectId, RectId>> find_piercing_pair(
    const std::vector<Rect>& rects);

inline bool is_nonpiercing_family(const std::vector<Rect>& rects) {
  return !find_piercing_pair(rects).has_value();
}

/// True iff no other instance point lies strictly inside the axis-parallel
/// rectangle with diagonal pq.
bool is_delaunay(const Point& p, const Point& q, const Instance& inst);

/// Proper interior crossing of one edge's horizontal segment with the
/// other's vertical segment. Collinear overlaps and shared endpoints do
/// not count.
bool l_shapes_cross(const LShape& a, const LShape& b);
bool edges_cross(const LEdge& e1, const LEdge& e2, const Instance& inst);

/// True iff removing the L from r leaves exactly two regions, each holding
/// at least one instance point.
bool l_shape_pierces_rect(const LShape& e, const Rect& r,
                          const std::vector<Point>& points);
bool edge_discretely_pierces_rect(const LEdge& e, const Rect& r,
                                  const Instance& inst);

}  // namespace rectsupport
