#include "rectsupport/support_graph.hpp"

#include <algorithm>

namespace rectsupport {

void SupportGraph::finalize() {
  std::sort(edges.begin(), edges.end());
  adjacency.assign(instance ? instance->points.size() : 0, {});
  for (const LEdge& e : edges) {
    adjacency[e.from].push_back(e.to);
    adjacency[e.to].push_back(e.from);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
}

SupportGraph make_graph(const Instance& inst, std::vector<LEdge> edges) {
  SupportGraph g;
  g.instance = &inst;
  g.edges = std::move(edges);
  g.finalize();
  return g;
}

}  // namespace rectsupport
