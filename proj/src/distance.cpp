#include "blockforge/distance.hpp"

#include <algorithm>

namespace blockforge {

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                               std::span<const char> blocked) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  auto is_blocked = [&](Vertex v) { return !blocked.empty() && blocked[v] != 0; };

  std::vector<int> dist(n, kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (is_blocked(s) || dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreached || is_blocked(w)) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, const VertexSet& centers, int radius) {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  g.check_set(centers);
  if (centers.empty()) return {};

  // Truncated BFS: stop expanding at the radius.
  std::vector<int> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> queue(centers.begin(), centers.end());
  for (Vertex c : centers) dist[c] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return VertexSet(std::move(queue));
}

Distance distance_between_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw InputError("distance between sets needs nonempty sets");
  g.check_set(a);
  g.check_set(b);
  auto dist = bfs_distances(g, a.ids());
  int best = kUnreached;
  for (Vertex v : b) {
    if (dist[v] != kUnreached && (best == kUnreached || dist[v] < best)) best = dist[v];
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

std::optional<Path> shortest_path_avoiding(const Graph& g, const VertexSet& sources,
                                           const VertexSet& targets, const VertexSet& forbidden) {
  g.check_set(sources);
  g.check_set(targets);
  g.check_set(forbidden);
  const auto n = static_cast<std::size_t>(g.vertex_count());

  std::vector<char> blocked(n, 0);
  for (Vertex v : forbidden) blocked[v] = 1;
  std::vector<char> is_target(n, 0);
  for (Vertex v : targets) is_target[v] = 1;

  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (blocked[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (is_target[u]) {
      Path path;
      for (Vertex v = u; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbors(u)) {
      if (seen[w] || blocked[w]) continue;
      seen[w] = 1;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

Graph graph_power(const Graph& g, int p) {
  if (p < 1) throw InputError("graph power exponent must be at least 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const Vertex source[] = {u};
    auto dist = bfs_distances(g, source);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (dist[v] != kUnreached && dist[v] <= p) edges.emplace_back(u, v);
    }
  }
  return Graph(g.roles(), edges);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  std::vector<Vertex> top;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    ++stats.histogram[d];
    if (d > stats.max_degree) {
      stats.max_degree = d;
      top.clear();
    }
    if (d == stats.max_degree) top.push_back(v);
  }
  stats.max_degree_vertices = VertexSet(std::move(top));
  return stats;
}

int max_degree_excluding(const Graph& g, Vertex excluded) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != excluded) best = std::max(best, g.degree(v));
  }
  return best;
}

}  // namespace blockforge
