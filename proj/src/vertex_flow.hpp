#pragma once

#include "rigid/graph.hpp"

namespace rigid::detail {

/// Maximum number of internally vertex-disjoint s-t paths (0-based indices),
/// by unit-capacity augmenting paths on the vertex-split graph. When
/// `skip_direct_edge` is set the edge {s, t} is ignored. Stops early once
/// `limit` paths are found (limit < 0: no limit).
int vertex_disjoint_paths(const Graph& g, int s, int t, bool skip_direct_edge,
                          int limit = -1);

}  // namespace rigid::detail
