#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "blockforge/graph.hpp"

namespace blockforge {

/// Hop count; std::nullopt stands for "no connecting path".
using Distance = std::optional<int>;

inline constexpr int kUnreached = -1;

/// Multi-source BFS. Returns per-vertex hop counts, kUnreached where no
/// source reaches. Vertices with blocked[v] != 0 are neither entered nor
/// used as sources; `blocked` may be empty.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                               std::span<const char> blocked = {});

/// {v : dist(v, centers) <= radius}. Empty centers give the empty set.
VertexSet ball(const Graph& g, const VertexSet& centers, int radius);

/// Fewest edges on a path with one end in `a` and the other in `b`.
/// Throws InputError if either set is empty.
Distance distance_between_sets(const Graph& g, const VertexSet& a, const VertexSet& b);

/// A shortest path from s to t inside G - forbidden, where s ranges over
/// S - forbidden and t over T - forbidden. Ties go to the smallest ids.
std::optional<Path> shortest_path_avoiding(const Graph& g, const VertexSet& sources,
                                           const VertexSet& targets, const VertexSet& forbidden);

/// Graph on the same vertices with u~v iff 1 <= dist(u, v) <= p. Roles kept.
Graph graph_power(const Graph& g, int p);

struct DegreeStats {
  std::map<int, std::size_t> histogram;  // degree -> vertex count
  int max_degree = 0;
  VertexSet max_degree_vertices;
};

DegreeStats degree_stats(const Graph& g);

/// Largest degree over all vertices except `excluded`.
int max_degree_excluding(const Graph& g, Vertex excluded);

}  // namespace blockforge
