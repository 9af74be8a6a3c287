#include "rectsupport/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace rectsupport {

LShape shape_of(const Point& from, const Point& to) {
  return LShape{from.x, from.y, to.x, to.y};
}

LShape shape_of(const Instance& inst, const LEdge& e) {
  return shape_of(inst.points[e.from], inst.points[e.to]);
}

LBend bend_of(const LShape& s) {
  return s.y_to > s.y_from ? LBend::left_up : LBend::up_left;
}

// ---- general position ------------------------------------------------

namespace {

struct CoordEntry {
  Coord value;
  bool is_point;
  std::int32_t owner;
  int side;  // 0 = point or rect-lo, 1 = rect-hi
  std::uint64_t tiebreak;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<CoordEntry> axis_entries(const Instance& inst, char axis,
                                     std::uint64_t seed) {
  std::vector<CoordEntry> es;
  es.reserve(inst.points.size() + 2 * inst.rects.size());
  for (const Point& p : inst.points) {
    Coord v = axis == 'x' ? p.x : p.y;
    es.push_back({v, true, p.id, 0, splitmix64(seed ^ (0x100000000ULL + p.id))});
  }
  for (const Rect& r : inst.rects) {
    Coord lo = axis == 'x' ? r.x_lo : r.y_lo;
    Coord hi = axis == 'x' ? r.x_hi : r.y_hi;
    // the hash ignores the side so that a degenerate rectangle keeps lo
    // before hi after the remap
    std::uint64_t h = splitmix64(seed ^ (0x200000000ULL + r.id));
    es.push_back({lo, false, r.id, 0, h});
    es.push_back({hi, false, r.id, 1, h});
  }
  return es;
}

void sort_entries(std::vector<CoordEntry>& es) {
  std::sort(es.begin(), es.end(), [](const CoordEntry& a, const CoordEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.tiebreak != b.tiebreak) return a.tiebreak < b.tiebreak;
    if (a.is_point != b.is_point) return a.is_point;
    if (a.owner != b.owner) return a.owner < b.owner;
    return a.side < b.side;
  });
}

}  // namespace

std::vector<Violation> validate_general_position(const Instance& inst) {
  std::vector<Violation> out;
  for (const Rect& r : inst.rects) {
    if (r.x_lo >= r.x_hi) out.push_back({ViolationKind::rect_sides_reversed, 'x', r.id, r.id, r.x_lo});
    if (r.y_lo >= r.y_hi) out.push_back({ViolationKind::rect_sides_reversed, 'y', r.id, r.id, r.y_lo});
  }
  for (char axis : {'x', 'y'}) {
    auto es = axis_entries(inst, axis, 0);
    std::sort(es.begin(), es.end(), [](const CoordEntry& a, const CoordEntry& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.is_point != b.is_point) return a.is_point;
      return a.owner < b.owner;
    });
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size() && es[j].value == es[i].value; ++j) {
        const CoordEntry& a = es[i];
        const CoordEntry& b = es[j];
        if (a.is_point && b.is_point && a.owner == b.owner) continue;
        if (!a.is_point && !b.is_point && a.owner == b.owner && a.side == b.side) continue;
        ViolationKind kind;
        if (a.is_point && b.is_point) {
          kind = axis == 'x' ? ViolationKind::point_point_x_tie
                             : ViolationKind::point_point_y_tie;
        } else if (!a.is_point && !b.is_point) {
          kind = ViolationKind::side_side_tie;
        } else {
          kind = ViolationKind::point_on_boundary;
        }
        out.push_back({kind, axis, a.owner, b.owner, a.value});
      }
    }
  }
  return out;
}

std::string to_string(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case ViolationKind::point_point_x_tie:
    case ViolationKind::point_point_y_tie:
      os << "points " << v.a << " and " << v.b << " share " << v.axis << "="
         << v.value;
      break;
    case ViolationKind::side_side_tie:
      os << "rects " << v.a << " and " << v.b << " share a side " << v.axis
         << "=" << v.value;
      break;
    case ViolationKind::point_on_boundary:
      os << "coordinate " << v.axis << "=" << v.value
         << " shared by a point and a rect side (ids " << v.a << ", " << v.b
         << ")";
      break;
    case ViolationKind::rect_sides_reversed:
      os << "rect " << v.a << " has non-increasing " << v.axis << " sides";
      break;
  }
  return os.str();
}

Instance perturb_to_general_position(const Instance& inst, std::uint64_t seed) {
  Instance out = inst;
  for (char axis : {'x', 'y'}) {
    auto es = axis_entries(inst, axis, splitmix64(seed ^ (axis == 'x' ? 1 : 2)));
    sort_entries(es);
    for (std::size_t rank = 0; rank < es.size(); ++rank) {
      const CoordEntry& e = es[rank];
      Coord v = static_cast<Coord>(rank);
      if (e.is_point) {
        (axis == 'x' ? out.points[e.owner].x : out.points[e.owner].y) = v;
      } else if (e.side == 0) {
        (axis == 'x' ? out.rects[e.owner].x_lo : out.rects[e.owner].y_lo) = v;
      } else {
        (axis == 'x' ? out.rects[e.owner].x_hi : out.rects[e.owner].y_hi) = v;
      }
    }
  }
  return out;
}

// ---- predicates --------------------------------------------------------

bool pierce_less(const Rect& a, const Rect& b) {
  return b.x_lo < a.x_lo && a.x_hi < b.x_hi && a.y_lo < b.y_lo &&
         b.y_hi < a.y_hi;
}

bool rect_pierces(const Rect& a, const Rect& b) {
  return pierce_less(a, b) || pierce_less(b, a);
}

std::optional<std::pair<RectId, RectId>> find_piercing_pair(
    const std::vector<Rect>& rects) {
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (std::size_t j = i + 1; j < rects.size(); ++j)
      if (rect_pierces(rects[i], rects[j]))
        return std::make_pair(rects[i].id, rects[j].id);
  return std::nullopt;
}

bool is_delaunay(const Point& p, const Point& q, const Instance& inst) {
  Coord x1 = std::min(p.x, q.x), x2 = std::max(p.x, q.x);
  Coord y1 = std::min(p.y, q.y), y2 = std::max(p.y, q.y);
  for (const Point& r : inst.points) {
    if (r.id == p.id || r.id == q.id) continue;
    if (x1 < r.x && r.x < x2 && y1 < r.y && r.y < y2) return false;
  }
  return true;
}

namespace {

// horizontal segment of a against vertical segment of b
bool h_crosses_v(const LShape& a, const LShape& b) {
  return a.x_from < b.v_x() && b.v_x() < a.x_to && b.v_y_min() < a.h_y() &&
         a.h_y() < b.v_y_max();
}

}  // namespace

bool l_shapes_cross(const LShape& a, const LShape& b) {
  return h_crosses_v(a, b) || h_crosses_v(b, a);
}

bool edges_cross(const LEdge& e1, const LEdge& e2, const Instance& inst) {
  return l_shapes_cross(shape_of(inst, e1), shape_of(inst, e2));
}

bool l_shape_pierces_rect(const LShape& e, const Rect& r,
                          const std::vector<Point>& points) {
  const Coord vx = e.v_x();
  const Coord vy_lo = e.v_y_min();
  const Coord vy_hi = e.v_y_max();

  // vertical segment cuts r top to bottom: left / right parts
  if (r.x_lo < vx && vx < r.x_hi && vy_lo < r.y_lo && r.y_hi < vy_hi) {
    bool left = false, right = false;
    for (const Point& p : points) {
      if (!r.contains(p)) continue;
      (p.x < vx ? left : right) = true;
      if (left && right) return true;
    }
    return false;
  }

  // horizontal segment cuts r left to right: bottom / top parts
  if (r.y_lo < e.h_y() && e.h_y() < r.y_hi && e.x_from < r.x_lo &&
      r.x_hi < e.x_to) {
    bool below = false, above = false;
    for (const Point& p : points) {
      if (!r.contains(p)) continue;
      (p.y < e.h_y() ? below : above) = true;
      if (below && above) return true;
    }
    return false;
  }

  // corner inside r, horizontal segment entering through the left side and
  // vertical segment leaving through the top or bottom
  if (r.contains(e.corner_x(), e.corner_y()) && e.x_from < r.x_lo) {
    const bool exits_top = e.y_to > r.y_hi;
    const bool exits_bottom = e.y_to < r.y_lo;
    if (!exits_top && !exits_bottom) return false;
    bool quadrant = false, rest = false;
    for (const Point& p : points) {
      if (!r.contains(p)) continue;
      bool in_quadrant = exits_top ? (p.x < vx && p.y > e.h_y())
                                   : (p.x < vx && p.y < e.h_y());
      (in_quadrant ? quadrant : rest) = true;
      if (quadrant && rest) return true;
    }
    return false;
  }

  return false;
}

bool edge_discretely_pierces_rect(const LEdge& e, const Rect& r,
                                  const Instance& inst) {
  return l_shape_pierces_rect(shape_of(inst, e), r, inst.points);
}

}  // namespace rectsupport
