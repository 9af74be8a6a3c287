#include "rectsupport/indexes.hpp"

#include <algorithm>
#include <limits>

namespace rectsupport {

namespace {
constexpr Coord kNegInf = std::numeric_limits<Coord>::min();
constexpr Coord kPosInf = std::numeric_limits<Coord>::max();

int rank_in(const std::vector<Coord>& keys, Coord v) {
  return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), v) -
                          keys.begin());
}
}  // namespace

// ---- BarrierIndex ------------------------------------------------------

void BarrierIndex::Tree::init(int leaves, Coord neutral_, bool take_min_) {
  cap = 1;
  while (cap < std::max(leaves, 1)) cap <<= 1;
  neutral = neutral_;
  take_min = take_min_;
  value.assign(2 * cap, neutral);
}

void BarrierIndex::Tree::set(int leaf, Coord v, SweepCounters* c,
                             std::uint64_t SweepCounters::*f) {
  int i = leaf + cap;
  value[i] = v;
  for (i >>= 1; i >= 1; i >>= 1) {
    value[i] = take_min ? std::min(value[2 * i], value[2 * i + 1])
                        : std::max(value[2 * i], value[2 * i + 1]);
    if (c) ++(c->*f);
  }
}

Coord BarrierIndex::Tree::range(int lo, int hi, SweepCounters* c) const {
  Coord acc = neutral;
  if (lo > hi) return acc;
  int l = lo + cap, r = hi + cap + 1;
  while (l < r) {
    if (l & 1) acc = take_min ? std::min(acc, value[l]) : std::max(acc, value[l]), ++l;
    if (r & 1) --r, acc = take_min ? std::min(acc, value[r]) : std::max(acc, value[r]);
    l >>= 1;
    r >>= 1;
    if (c) ++c->queries;
  }
  return acc;
}

BarrierIndex::BarrierIndex(const std::vector<Rect>& rects,
                           SweepCounters* counters)
    : rects_(&rects), counters_(counters) {
  lo_keys_.reserve(rects.size());
  hi_keys_.reserve(rects.size());
  for (const Rect& r : rects) {
    lo_keys_.push_back(r.y_lo);
    hi_keys_.push_back(r.y_hi);
  }
  std::sort(lo_keys_.begin(), lo_keys_.end());
  std::sort(hi_keys_.begin(), hi_keys_.end());
  lo_rank_.resize(rects.size());
  hi_rank_.resize(rects.size());
  for (const Rect& r : rects) {
    lo_rank_[r.id] = rank_in(lo_keys_, r.y_lo);
    hi_rank_[r.id] = rank_in(hi_keys_, r.y_hi);
  }
  upper_.init(static_cast<int>(rects.size()), kPosInf, true);
  lower_.init(static_cast<int>(rects.size()), kNegInf, false);
}

void BarrierIndex::insert(RectId r) {
  upper_.set(lo_rank_[r], (*rects_)[r].y_hi, counters_, &SweepCounters::inserts);
  lower_.set(hi_rank_[r], (*rects_)[r].y_lo, counters_, &SweepCounters::inserts);
}

void BarrierIndex::erase(RectId r) {
  upper_.set(lo_rank_[r], kPosInf, counters_, &SweepCounters::deletes);
  lower_.set(hi_rank_[r], kNegInf, counters_, &SweepCounters::deletes);
}

std::optional<Coord> BarrierIndex::upper_barrier(Coord y) const {
  if (lo_keys_.empty()) return std::nullopt;
  // leaves with y_lo > y
  int lo = static_cast<int>(std::upper_bound(lo_keys_.begin(), lo_keys_.end(), y) -
                            lo_keys_.begin());
  Coord r = upper_.range(lo, static_cast<int>(lo_keys_.size()) - 1, counters_);
  if (r == kPosInf) return std::nullopt;
  return r;
}

std::optional<Coord> BarrierIndex::lower_barrier(Coord y) const {
  if (hi_keys_.empty()) return std::nullopt;
  // leaves with y_hi < y
  int hi = static_cast<int>(std::lower_bound(hi_keys_.begin(), hi_keys_.end(), y) -
                            hi_keys_.begin()) - 1;
  Coord r = lower_.range(0, hi, counters_);
  if (r == kNegInf) return std::nullopt;
  return r;
}

// ---- CandidateIndex ----------------------------------------------------

CandidateIndex::CandidateIndex(const std::vector<Point>& points,
                               SweepCounters* counters)
    : points_(&points), counters_(counters) {
  const int n = static_cast<int>(points.size());
  sorted_y_.reserve(n);
  for (const Point& p : points) sorted_y_.push_back(p.y);
  std::sort(sorted_y_.begin(), sorted_y_.end());
  id_at_.assign(n, -1);
  rank_of_.assign(n, -1);
  for (const Point& p : points) {
    int r = rank_in(sorted_y_, p.y);
    rank_of_[p.id] = r;
    id_at_[r] = p.id;
  }
  cap_ = 1;
  while (cap_ < std::max(n, 1)) cap_ <<= 1;
  maxx_.assign(2 * cap_, kNegInf);
}

void CandidateIndex::set_leaf(int rank, Coord x, std::uint64_t SweepCounters::*f) {
  int i = rank + cap_;
  maxx_[i] = x;
  for (i >>= 1; i >= 1; i >>= 1) {
    maxx_[i] = std::max(maxx_[2 * i], maxx_[2 * i + 1]);
    if (counters_) ++(counters_->*f);
  }
}

void CandidateIndex::insert(PointId p) {
  set_leaf(rank_of_[p], (*points_)[p].x, &SweepCounters::inserts);
  ++alive_;
}

void CandidateIndex::erase(PointId p) {
  set_leaf(rank_of_[p], kNegInf, &SweepCounters::deletes);
  --alive_;
}

bool CandidateIndex::contains(PointId p) const {
  return maxx_[rank_of_[p] + cap_] != kNegInf;
}

std::vector<PointId> CandidateIndex::alive_ids() const {
  std::vector<PointId> out;
  for (int r = 0; r < static_cast<int>(id_at_.size()); ++r)
    if (maxx_[r + cap_] != kNegInf) out.push_back(id_at_[r]);
  return out;
}

std::pair<int, int> CandidateIndex::rank_range(Coord y_lo, Coord y_hi) const {
  // ranks of points with y strictly inside (y_lo, y_hi)
  int lo = static_cast<int>(std::upper_bound(sorted_y_.begin(), sorted_y_.end(), y_lo) -
                            sorted_y_.begin());
  int hi = static_cast<int>(std::lower_bound(sorted_y_.begin(), sorted_y_.end(), y_hi) -
                            sorted_y_.begin()) - 1;
  return {lo, hi};
}

void CandidateIndex::walk(int node, int lo, int hi, int qlo, int qhi,
                          bool top_down, Coord& xbar,
                          std::vector<PointId>& out) const {
  if (qhi < lo || hi < qlo || maxx_[node] <= xbar) return;
  if (counters_) ++counters_->queries;
  if (lo == hi) {
    out.push_back(id_at_[lo]);
    xbar = maxx_[node];
    return;
  }
  int mid = (lo + hi) / 2;
  if (top_down) {
    walk(2 * node + 1, mid + 1, hi, qlo, qhi, top_down, xbar, out);
    walk(2 * node, lo, mid, qlo, qhi, top_down, xbar, out);
  } else {
    walk(2 * node, lo, mid, qlo, qhi, top_down, xbar, out);
    walk(2 * node + 1, mid + 1, hi, qlo, qhi, top_down, xbar, out);
  }
}

std::vector<PointId> CandidateIndex::query_below(Coord y_lo, Coord y_hi) const {
  std::vector<PointId> out;
  auto [qlo, qhi] = rank_range(y_lo, y_hi);
  Coord xbar = kNegInf;
  if (qlo <= qhi) walk(1, 0, cap_ - 1, qlo, qhi, true, xbar, out);
  return out;
}

std::vector<PointId> CandidateIndex::query_above(Coord y_lo, Coord y_hi) const {
  std::vector<PointId> out;
  auto [qlo, qhi] = rank_range(y_lo, y_hi);
  Coord xbar = kNegInf;
  if (qlo <= qhi) walk(1, 0, cap_ - 1, qlo, qhi, false, xbar, out);
  return out;
}

// ---- OcclusionIndex ----------------------------------------------------

void OcclusionIndex::insert(PointId p) {
  by_y_.emplace((*points_)[p].y, p);
  if (counters_) ++counters_->inserts;
}

void OcclusionIndex::erase(PointId p) {
  by_y_.erase((*points_)[p].y);
  if (counters_) ++counters_->deletes;
}

bool OcclusionIndex::contains(PointId p) const {
  return by_y_.count((*points_)[p].y) > 0;
}

std::vector<PointId> OcclusionIndex::alive_ids() const {
  std::vector<PointId> out;
  out.reserve(by_y_.size());
  for (const auto& [y, id] : by_y_) out.push_back(id);
  return out;
}

std::vector<PointId> OcclusionIndex::collect_inside(Coord y_lo, Coord y_hi) const {
  std::vector<PointId> out;
  for (auto it = by_y_.upper_bound(y_lo); it != by_y_.end() && it->first < y_hi;
       ++it) {
    out.push_back(it->second);
    if (counters_) ++counters_->queries;
  }
  return out;
}

int occlude(CandidateIndex& cand, OcclusionIndex& occ, Coord y_lo, Coord y_hi) {
  std::vector<PointId> victims = occ.collect_inside(y_lo, y_hi);
  for (PointId v : victims) {
    cand.erase(v);
    occ.erase(v);
  }
  return static_cast<int>(victims.size());
}

}  // namespace rectsupport
