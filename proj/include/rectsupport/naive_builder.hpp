#pragma once

#include "rectsupport/support_graph.hpp"

namespace rectsupport {

/// Throws std::invalid_argument naming the first violation when the
/// instance is not in general position or the family pierces.
void require_buildable(const Instance& inst);

/// Reference builder. Sweeps points left to right; at each point scans all
/// earlier points in decreasing x and adds the edge when its spanning
/// rectangle is empty, it crosses nothing already added, and it discretely
/// pierces no rectangle. This edge set is the ground truth the sweep
/// engine must reproduce.
SupportGraph naive_build_support(const Instance& inst);

}  // namespace rectsupport
