#pragma once

#include <span>
#include <vector>

#include "blockforge/graph.hpp"

namespace blockforge {

struct MengerResult {
  int max_count = 0;
  VertexSet min_cut;        // |min_cut| == max_count
  std::vector<Path> paths;  // max_count vertex-disjoint S-T paths
};

/// Maximum number of vertex-disjoint S-T paths and a minimum S-T vertex
/// separator, via unit vertex capacities on the split graph. A vertex in
/// S and T is a one-vertex path and belongs to every separator.
MengerResult menger_disjoint_paths(const Graph& g, const VertexSet& S, const VertexSet& T);

/// Number of vertex-disjoint paths from `sources` to `targets` avoiding
/// vertices with blocked[v] != 0, stopping early once `limit` is reached.
int count_disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                         std::span<const Vertex> targets, std::span<const char> blocked, int limit);

}  // namespace blockforge
