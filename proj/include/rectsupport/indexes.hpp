#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rectsupport/geometry.hpp"

namespace rectsupport {

/// Work counters for the sweep structures. The insert/delete/query fields
/// count tree nodes touched; `occlusions` counts points removed.
struct SweepCounters {
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t queries = 0;
  std::uint64_t occlusions = 0;

  std::uint64_t work() const { return inserts + deletes + queries; }
};

/// Interval index over the rectangles currently straddled by the sweep
/// line with sweep-processed points on both sides. Answers, in O(log m),
/// the lowest top among rectangles strictly above a y and the highest
/// bottom among rectangles strictly below it.
class BarrierIndex {
 public:
  explicit BarrierIndex(const std::vector<Rect>& rects,
                        SweepCounters* counters = nullptr);

  void insert(RectId r);
  void erase(RectId r);

  /// min y_hi over active rects with y_lo > y; nullopt if none.
  std::optional<Coord> upper_barrier(Coord y) const;
  /// max y_lo over active rects with y_hi < y; nullopt if none.
  std::optional<Coord> lower_barrier(Coord y) const;

 private:
  struct Tree {
    int cap = 1;
    std::vector<Coord> value;  // 2*cap, min- or max-combined
    Coord neutral = 0;
    bool take_min = true;

    void init(int leaves, Coord neutral_, bool take_min_);
    void set(int leaf, Coord v, SweepCounters* c, std::uint64_t SweepCounters::*f);
    Coord range(int lo, int hi, SweepCounters* c) const;  // inclusive leaves
  };

  const std::vector<Rect>* rects_;
  SweepCounters* counters_;
  std::vector<Coord> lo_keys_;  // sorted y_lo values
  std::vector<Coord> hi_keys_;  // sorted y_hi values
  std::vector<int> lo_rank_;    // rect id -> rank among y_lo
  std::vector<int> hi_rank_;
  Tree upper_;  // keyed by y_lo rank, stores y_hi, min-combined
  Tree lower_;  // keyed by y_hi rank, stores y_lo, max-combined
};

/// Dynamic set of alive points left of the sweep, keyed by y rank, with
/// staircase reporting: the points in an open y range not dominated toward
/// the query corner by another alive point in that range.
class CandidateIndex {
 public:
  explicit CandidateIndex(const std::vector<Point>& points,
                          SweepCounters* counters = nullptr);

  void insert(PointId p);
  void erase(PointId p);
  bool contains(PointId p) const;
  int size() const { return alive_; }
  std::vector<PointId> alive_ids() const;

  /// Alive points with y in (y_lo, y_hi), maximal under
  /// (larger x, larger y) dominance; reported top-down.
  std::vector<PointId> query_below(Coord y_lo, Coord y_hi) const;
  /// Alive points with y in (y_lo, y_hi), maximal under
  /// (larger x, smaller y) dominance; reported bottom-up.
  std::vector<PointId> query_above(Coord y_lo, Coord y_hi) const;

 private:
  const std::vector<Point>* points_;
  SweepCounters* counters_;
  int cap_ = 1;
  std::vector<Coord> maxx_;        // segment tree over y ranks
  std::vector<Coord> sorted_y_;    // rank -> y
  std::vector<PointId> id_at_;     // rank -> point id
  std::vector<int> rank_of_;       // point id -> rank
  int alive_ = 0;

  void set_leaf(int rank, Coord x, std::uint64_t SweepCounters::*f);
  void walk(int node, int lo, int hi, int qlo, int qhi, bool top_down,
            Coord& xbar, std::vector<PointId>& out) const;
  std::pair<int, int> rank_range(Coord y_lo, Coord y_hi) const;
};

/// Ordered set of the alive points keyed by y; reports and deletes the
/// points inside an open y span.
class OcclusionIndex {
 public:
  explicit OcclusionIndex(const std::vector<Point>& points,
                          SweepCounters* counters = nullptr)
      : points_(&points), counters_(counters) {}

  void insert(PointId p);
  void erase(PointId p);
  bool contains(PointId p) const;
  int size() const { return static_cast<int>(by_y_.size()); }
  std::vector<PointId> alive_ids() const;

  /// Alive points with y strictly inside (y_lo, y_hi).
  std::vector<PointId> collect_inside(Coord y_lo, Coord y_hi) const;

 private:
  const std::vector<Point>* points_;
  SweepCounters* counters_;
  std::map<Coord, PointId> by_y_;
};

/// Deletes from both indexes every alive point whose y lies strictly
/// inside the span; returns the number removed.
int occlude(CandidateIndex& cand, OcclusionIndex& occ, Coord y_lo, Coord y_hi);

}  // namespace rectsupport
