#pragma once

// Small helpers shared by the test binaries. The BFS here is deliberately
// written from scratch so it can serve as an oracle for the library.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "blockforge/graph.hpp"

namespace testing_support {

using blockforge::Graph;
using blockforge::Vertex;
using blockforge::VertexRole;

inline constexpr int kFar = INT_MAX;

inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<VertexRole> roles;
  for (int v = 0; v < n; ++v) roles.push_back(VertexRole::tree_node(0, v));
  return Graph(roles, edges);
}

// a-b-c-... on n vertices
inline Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

// Hop counts from `from`, kFar where unreachable.
inline std::vector<int> plain_bfs(const Graph& g, const std::vector<Vertex>& from) {
  std::vector<int> d(g.vertex_count(), kFar);
  std::deque<Vertex> q;
  for (Vertex s : from) {
    if (d[s] != 0) {
      d[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (d[w] == kFar) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
    }
  }
  return d;
}

inline int plain_distance(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  auto d = plain_bfs(g, a);
  int best = kFar;
  for (Vertex v : b) best = std::min(best, d[v]);
  return best;
}

inline std::vector<Vertex> as_vector(const blockforge::VertexSet& s) { return {s.begin(), s.end()}; }

}  // namespace testing_support
