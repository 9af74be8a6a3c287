#include "rectsupport/checks.hpp"

#include <algorithm>
#include <vector>

namespace rectsupport {

namespace {

int sign(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient(Coord ax, Coord ay, Coord bx, Coord by, Coord cx, Coord cy) {
  __int128 lhs = static_cast<__int128>(bx - ax) * (cy - ay);
  __int128 rhs = static_cast<__int128>(by - ay) * (cx - ax);
  return sign(lhs - rhs);
}

bool on_closed_segment(Coord ax, Coord ay, Coord bx, Coord by, Coord px,
                       Coord py) {
  if (orient(ax, ay, bx, by, px, py) != 0) return false;
  return std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
         std::min(ay, by) <= py && py <= std::max(ay, by);
}

// Closed segments p1p2 and q1q2 conflict if they share any point that is
// not a coordinate-identical endpoint of both.
bool diagonals_conflict(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2) {
  int o1 = orient(p1.x, p1.y, p2.x, p2.y, q1.x, q1.y);
  int o2 = orient(p1.x, p1.y, p2.x, p2.y, q2.x, q2.y);
  int o3 = orient(q1.x, q1.y, q2.x, q2.y, p1.x, p1.y);
  int o4 = orient(q1.x, q1.y, q2.x, q2.y, p2.x, p2.y);

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return true;  // proper crossing

  auto is_endpoint_of_both = [&](Coord x, Coord y) {
    bool of_p = (x == p1.x && y == p1.y) || (x == p2.x && y == p2.y);
    bool of_q = (x == q1.x && y == q1.y) || (x == q2.x && y == q2.y);
    return of_p && of_q;
  };

  // collinear overlap or a T-touch: an endpoint of one segment lies on the
  // other without being a shared endpoint
  for (const Point* e : {&q1, &q2})
    if (on_closed_segment(p1.x, p1.y, p2.x, p2.y, e->x, e->y) &&
        !is_endpoint_of_both(e->x, e->y))
      return true;
  for (const Point* e : {&p1, &p2})
    if (on_closed_segment(q1.x, q1.y, q2.x, q2.y, e->x, e->y) &&
        !is_endpoint_of_both(e->x, e->y))
      return true;
  return false;
}

}  // namespace

std::optional<RectId> check_support(const SupportGraph& g) {
  const Instance& inst = *g.instance;
  const int m = inst.m();
  int first_bad = m;
#pragma omp parallel
  {
    std::vector<PointId> members;
    std::vector<char> in_rect(inst.points.size(), 0);
    std::vector<PointId> stack;
    int local_bad = m;
#pragma omp for schedule(dynamic, 8) nowait
    for (int ri = 0; ri < m; ++ri) {
      const Rect& r = inst.rects[ri];
      members.clear();
      for (const Point& p : inst.points)
        if (r.contains(p)) members.push_back(p.id);
      if (members.size() <= 1) continue;
      for (PointId id : members) in_rect[id] = 1;
      stack.assign(1, members[0]);
      in_rect[members[0]] = 2;
      std::size_t reached = 1;
      while (!stack.empty()) {
        PointId v = stack.back();
        stack.pop_back();
        for (PointId w : g.adjacency[v]) {
          if (in_rect[w] == 1) {
            in_rect[w] = 2;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      for (PointId id : members) in_rect[id] = 0;
      if (reached != members.size() && ri < local_bad) local_bad = ri;
    }
#pragma omp critical
    if (local_bad < first_bad) first_bad = local_bad;
  }
  if (first_bad == m) return std::nullopt;
  return static_cast<RectId>(first_bad);
}

std::optional<std::pair<int, int>> check_planarity(const SupportGraph& g) {
  const Instance& inst = *g.instance;
  const int ne = static_cast<int>(g.edges.size());
  long long first_bad = -1;
#pragma omp parallel
  {
    long long local = -1;
#pragma omp for schedule(dynamic, 32) nowait
    for (int i = 0; i < ne; ++i) {
      const LEdge& a = g.edges[i];
      for (int j = i + 1; j < ne; ++j) {
        const LEdge& b = g.edges[j];
        if (diagonals_conflict(inst.points[a.from], inst.points[a.to],
                               inst.points[b.from], inst.points[b.to])) {
          long long code = static_cast<long long>(i) * ne + j;
          if (local == -1 || code < local) local = code;
          break;
        }
      }
    }
#pragma omp critical
    if (local != -1 && (first_bad == -1 || local < first_bad)) first_bad = local;
  }
  if (first_bad == -1) return std::nullopt;
  return std::make_pair(static_cast<int>(first_bad / ne),
                        static_cast<int>(first_bad % ne));
}

std::optional<int> check_all_delaunay(const SupportGraph& g) {
  const Instance& inst = *g.instance;
  const int ne = static_cast<int>(g.edges.size());
  int first_bad = ne;
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (int i = 0; i < ne; ++i) {
    const LEdge& e = g.edges[i];
    if (!is_delaunay(inst.points[e.from], inst.points[e.to], inst) &&
        i < first_bad)
      first_bad = i;
  }
  if (first_bad == ne) return std::nullopt;
  return first_bad;
}

std::optional<std::pair<int, RectId>> check_no_discrete_piercing(
    const SupportGraph& g) {
  const Instance& inst = *g.instance;
  const int ne = static_cast<int>(g.edges.size());
  long long first_bad = -1;
#pragma omp parallel
  {
    long long local = -1;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < ne; ++i) {
      const LShape s = shape_of(inst, g.edges[i]);
      for (const Rect& r : inst.rects) {
        if (l_shape_pierces_rect(s, r, inst.points)) {
          long long code = static_cast<long long>(i) * (inst.m() + 1) + r.id;
          if (local == -1 || code < local) local = code;
          break;
        }
      }
    }
#pragma omp critical
    if (local != -1 && (first_bad == -1 || local < first_bad)) first_bad = local;
  }
  if (first_bad == -1) return std::nullopt;
  return std::make_pair(static_cast<int>(first_bad / (inst.m() + 1)),
                        static_cast<RectId>(first_bad % (inst.m() + 1)));
}

bool planarity_bound_ok(const SupportGraph& g) {
  const std::size_t n = g.instance->points.size();
  if (n >= 3) return g.edges.size() <= 3 * n - 6;
  return g.edges.size() <= (n == 2 ? 1 : 0);
}

GraphAudit audit_graph(const SupportGraph& g) {
  GraphAudit a;
  a.support_failure = check_support(g);
  a.planarity_failure = check_planarity(g);
  a.delaunay_failure = check_all_delaunay(g);
  a.piercing_failure = check_no_discrete_piercing(g);
  a.bound_ok = planarity_bound_ok(g);
  return a;
}

}  // namespace rectsupport
