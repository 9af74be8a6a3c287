#include "rectsupport/floodfill.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace rectsupport {

OrthoPolyline OrthoPolyline::from_shape(const LShape& s) {
  OrthoPolyline p;
  p.h = HSeg{s.h_y(), std::min(s.x_from, s.x_to), std::max(s.x_from, s.x_to)};
  p.v = VSeg{s.v_x(), s.v_y_min(), s.v_y_max()};
  return p;
}

OrthoPolyline OrthoPolyline::vertical(Coord x, Coord y1, Coord y2) {
  OrthoPolyline p;
  p.v = VSeg{x, std::min(y1, y2), std::max(y1, y2)};
  return p;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool floodfill_discretely_pierces(const OrthoPolyline& poly, const Rect& r,
                                  const Instance& inst) {
  // grid lines: the rectangle's sides plus any polyline line falling inside
  std::set<Coord> xset{r.x_lo, r.x_hi};
  std::set<Coord> yset{r.y_lo, r.y_hi};
  auto add_x = [&](Coord v) {
    if (r.x_lo < v && v < r.x_hi) xset.insert(v);
  };
  auto add_y = [&](Coord v) {
    if (r.y_lo < v && v < r.y_hi) yset.insert(v);
  };
  if (poly.h) {
    add_y(poly.h->y);
    add_x(poly.h->x1);
    add_x(poly.h->x2);
  }
  if (poly.v) {
    add_x(poly.v->x);
    add_y(poly.v->y1);
    add_y(poly.v->y2);
  }
  std::vector<Coord> xs(xset.begin(), xset.end());
  std::vector<Coord> ys(yset.begin(), yset.end());
  const int nx = static_cast<int>(xs.size()) - 1;
  const int ny = static_cast<int>(ys.size()) - 1;
  if (nx <= 0 || ny <= 0) return false;

  auto cell = [&](int i, int j) { return j * nx + i; };

  // a shared cell border is impassable iff a polyline segment covers it
  auto v_border_blocked = [&](Coord x, Coord ylo, Coord yhi) {
    return poly.v && poly.v->x == x && poly.v->y1 <= ylo && yhi <= poly.v->y2;
  };
  auto h_border_blocked = [&](Coord y, Coord xlo, Coord xhi) {
    return poly.h && poly.h->y == y && poly.h->x1 <= xlo && xhi <= poly.h->x2;
  };

  Dsu dsu(nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx && !v_border_blocked(xs[i + 1], ys[j], ys[j + 1]))
        dsu.unite(cell(i, j), cell(i + 1, j));
      if (j + 1 < ny && !h_border_blocked(ys[j + 1], xs[i], xs[i + 1]))
        dsu.unite(cell(i, j), cell(i, j + 1));
    }
  }

  std::set<int> faces;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) faces.insert(dsu.find(cell(i, j)));
  if (faces.size() != 2) return false;

  std::set<int> witnessed;
  for (const Point& p : inst.points) {
    if (!r.contains(p)) continue;
    auto xi = std::upper_bound(xs.begin(), xs.end(), p.x) - xs.begin() - 1;
    auto yi = std::upper_bound(ys.begin(), ys.end(), p.y) - ys.begin() - 1;
    if (xs[xi] == p.x || ys[yi] == p.y) continue;  // on a cut line
    witnessed.insert(dsu.find(cell(static_cast<int>(xi), static_cast<int>(yi))));
    if (witnessed.size() == 2) return true;
  }
  return false;
}

bool floodfill_discretely_pierces(const LEdge& e, const Rect& r,
                                  const Instance& inst) {
  return floodfill_discretely_pierces(
      OrthoPolyline::from_shape(shape_of(inst, e)), r, inst);
}

}  // namespace rectsupport
