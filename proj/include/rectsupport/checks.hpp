#pragma once

#include <optional>
#include <utility>

#include "rectsupport/support_graph.hpp"

namespace rectsupport {

/// First rectangle whose contained points do not induce a connected
/// subgraph, or nullopt. Rectangles holding at most one point pass.
std::optional<RectId> check_support(const SupportGraph& g);

/// First pair of edges (indexes into g.edges) whose straight diagonals
/// intersect anywhere other than a shared endpoint, or nullopt.
std::optional<std::pair<int, int>> check_planarity(const SupportGraph& g);

/// First edge (index) whose spanning rectangle contains another point.
std::optional<int> check_all_delaunay(const SupportGraph& g);

/// First (edge index, rect id) where the L discretely pierces the rect.
std::optional<std::pair<int, RectId>> check_no_discrete_piercing(
    const SupportGraph& g);

/// |E| <= 3n - 6 for n >= 3.
bool planarity_bound_ok(const SupportGraph& g);

struct GraphAudit {
  std::optional<RectId> support_failure;
  std::optional<std::pair<int, int>> planarity_failure;
  std::optional<int> delaunay_failure;
  std::optional<std::pair<int, RectId>> piercing_failure;
  bool bound_ok = true;

  bool ok() const {
    return !support_failure && !planarity_failure && !delaunay_failure &&
           !piercing_failure && bound_ok;
  }
};

GraphAudit audit_graph(const SupportGraph& g);

}  // namespace rectsupport
