#pragma once

#include <vector>

#include "rectsupport/geometry.hpp"

namespace rectsupport {

/// Graph on the points of an instance, built from L-shaped edges.
/// Edges are kept sorted by (from, to); adjacency lists are sorted.
struct SupportGraph {
  const Instance* instance = nullptr;
  std::vector<LEdge> edges;
  std::vector<std::vector<PointId>> adjacency;

  /// Sorts the edge list and rebuilds adjacency.
  void finalize();
};

SupportGraph make_graph(const Instance& inst, std::vector<LEdge> edges);

}  // namespace rectsupport
