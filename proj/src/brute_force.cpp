#include "blockforge/brute_force.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace blockforge {

namespace {

using Mask = std::uint32_t;
constexpr int kFar = 1 << 20;

std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::vector<int> frontier{s};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (d[s][w] == kFar) {
            d[s][w] = d[s][u] + 1;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return d;
}

struct Enumerator {
  const Graph& g;
  Mask allowed;
  Mask targets;
  std::map<Mask, Path> found;  // one representative per vertex set
  Path current;

  void walk(Vertex u, Mask used) {
    current.push_back(u);
    if (targets >> u & 1U) found.emplace(used, current);
    for (Vertex w : g.neighbors(u)) {
      const Mask bit = Mask{1} << w;
      if ((allowed & bit) && !(used & bit)) walk(w, used | bit);
    }
    current.pop_back();
  }
};

// Chooses k paths with pairwise disjoint (path, c-1 neighbourhood) pairs,
// i.e. every vertex pair across two chosen paths is at distance >= c.
bool pick(const std::vector<Mask>& masks, const std::vector<Mask>& near, int k, std::size_t from,
          std::vector<std::size_t>& chosen, Mask blocked) {
  if (static_cast<int>(chosen.size()) == k) return true;
  for (std::size_t i = from; i < masks.size(); ++i) {
    if (masks[i] & blocked) continue;
    chosen.push_back(i);
    if (pick(masks, near, k, i + 1, chosen, blocked | near[i])) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Path>> brute_force_far_tuples(const Graph& g, const VertexSet& S,
                                                        const VertexSet& T, int k, int c,
                                                        const VertexSet& forbidden) {
  if (g.vertex_count() > kBruteForceMaxVertices) {
    throw InputError("brute force is limited to " + std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  if (k < 1 || c < 1) throw InputError("k and c must be positive");
  g.check_set(S);
  g.check_set(T);
  g.check_set(forbidden);

  Mask allowed = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!forbidden.contains(v)) allowed |= Mask{1} << v;
  }
  Mask targets = 0;
  for (Vertex t : T) targets |= Mask{1} << t;

  Enumerator e{g, allowed, targets, {}, {}};
  for (Vertex s : S) {
    if (allowed >> s & 1U) e.walk(s, Mask{1} << s);
  }
  std::vector<Path> paths;
  for (auto& [mask, path] : e.found) paths.push_back(path);
  const auto d = all_pairs(g);
  std::vector<Mask> masks;
  std::vector<Mask> near;
  for (auto& [mask, path] : e.found) {
    masks.push_back(mask);
    Mask around = 0;
    for (Vertex x : path) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (d[x][v] < c) around |= Mask{1} << v;
      }
    }
    near.push_back(around);
  }
  std::vector<std::size_t> chosen;
  if (!pick(masks, near, k, 0, chosen, 0)) return std::nullopt;
  std::vector<Path> out;
  for (std::size_t i : chosen) out.push_back(paths[i]);
  return out;
}

}  // namespace blockforge
