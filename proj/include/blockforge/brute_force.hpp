#pragma once

#include <optional>
#include <vector>

#include "blockforge/graph.hpp"

namespace blockforge {

inline constexpr int kBruteForceMaxVertices = 14;

/// Reference answer for the far-path question on tiny graphs. Lists every
/// simple path from S to T (chords allowed), then looks for k of them with
/// all pairwise distances >= c using an all-pairs distance table. Shares no
/// code with the branch-and-bound solver beyond Graph itself.
/// Throws InputError above kBruteForceMaxVertices vertices.
std::optional<std::vector<Path>> brute_force_far_tuples(const Graph& g, const VertexSet& S,
                                                        const VertexSet& T, int k, int c,
                                                        const VertexSet& forbidden = {});

}  // namespace blockforge
