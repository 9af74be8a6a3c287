#include "rectsupport/naive_builder.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rectsupport {

void require_buildable(const Instance& inst) {
  auto violations = validate_general_position(inst);
  if (!violations.empty())
    throw std::invalid_argument("instance not in general position: " +
                                to_string(violations.front()));
  if (auto pair = find_piercing_pair(inst.rects))
    throw std::invalid_argument("rect " + std::to_string(pair->first) +
                                " and rect " + std::to_string(pair->second) +
                                " pierce");
}

SupportGraph naive_build_support(const Instance& inst) {
  require_buildable(inst);

  std::vector<const Point*> order;
  order.reserve(inst.points.size());
  for (const Point& p : inst.points) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const Point* a, const Point* b) { return a->x < b->x; });

  std::vector<LEdge> edges;
  std::vector<LShape> shapes;  // parallel to edges, in sweep order

  for (std::size_t i = 1; i < order.size(); ++i) {
    const Point& p = *order[i];
    const std::size_t first_at_p = edges.size();
    // empty-rectangle bounds maintained while scanning right to left:
    // a candidate is Delaunay iff its y avoids every already-scanned y
    // strictly between the candidate and p
    Coord lo = std::numeric_limits<Coord>::min();
    Coord hi = std::numeric_limits<Coord>::max();
    for (std::size_t k = i; k-- > 0;) {
      const Point& q = *order[k];
      const bool delaunay = q.y > p.y ? q.y < hi : q.y > lo;
      if (q.y > p.y) hi = std::min(hi, q.y); else lo = std::max(lo, q.y);
      if (!delaunay) continue;

      const LShape cand = shape_of(q, p);
      // only edges whose vertical side lies strictly inside (x(q), x(p))
      // can cross the new L; edges are stored in sweep order, so that is a
      // suffix of the list
      bool crosses = false;
      for (std::size_t t = edges.size(); t-- > 0;) {
        if (shapes[t].v_x() <= q.x) break;
        if (l_shapes_cross(cand, shapes[t])) {
          crosses = true;
          break;
        }
      }
      if (crosses) continue;

      bool pierces = false;
      for (const Rect& r : inst.rects) {
        if (l_shape_pierces_rect(cand, r, inst.points)) {
          pierces = true;
          break;
        }
      }
      if (pierces) continue;

      edges.push_back({q.id, p.id});
      shapes.push_back(cand);
    }
    // edges sharing the new point never cross each other
    for (std::size_t a = first_at_p; a < edges.size(); ++a)
      for (std::size_t b = a + 1; b < edges.size(); ++b)
        if (l_shapes_cross(shapes[a], shapes[b]))
          throw std::logic_error("edges added at one sweep point cross");
  }

  return make_graph(inst, std::move(edges));
}

}  // namespace rectsupport
