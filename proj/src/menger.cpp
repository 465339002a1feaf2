#include "blockforge/menger.hpp"

#include <algorithm>
#include <limits>

namespace blockforge {

namespace {

struct SourceGroup {
  std::span<const Vertex> vertices;
  int capacity;  // most paths allowed to start in this group
};

// Split-vertex network: in(v) = 2v, out(v) = 2v + 1, then source and sink.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, std::span<const SourceGroup> groups, std::span<const Vertex> targets,
               std::span<const char> blocked)
      : n_(g.vertex_count()), head_(2 * n_ + 2 + groups.size(), -1) {
    const int inf = std::numeric_limits<int>::max() / 2;
    auto open = [&](Vertex v) { return blocked.empty() || blocked[v] == 0; };
    for (Vertex v = 0; v < n_; ++v) {
      if (!open(v)) continue;
      add_arc(2 * v, 2 * v + 1, 1);
      for (Vertex w : g.neighbors(v)) {
        if (open(w)) add_arc(2 * v + 1, 2 * w, inf);
      }
    }
    // Each group gets a gate node so that at most `capacity` paths start in it.
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const int gate = 2 * n_ + 2 + static_cast<int>(i);
      add_arc(source(), gate, groups[i].capacity);
      for (Vertex s : groups[i].vertices) {
        if (open(s)) add_arc(gate, 2 * s, inf);
      }
    }
    for (Vertex t : targets) {
      if (open(t)) add_arc(2 * t + 1, sink(), inf);
    }
  }

  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  /// Augments along BFS paths until no path remains or `limit` is hit.
  int max_flow(int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::vector<int> queue{source()};
      via[source()] = -2;
      for (std::size_t i = 0; i < queue.size() && via[sink()] == -1; ++i) {
        for (int a = head_[queue[i]]; a != -1; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.cap > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[sink()] == -1) break;
      // Every augmenting path crosses a unit vertex arc, so push one unit.
      for (int node = sink(); node != source(); node = arcs_[via[node] ^ 1].to) {
        arcs_[via[node]].cap -= 1;
        arcs_[via[node] ^ 1].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  /// Vertices whose in-copy is reachable in the residual graph but whose
  /// out-copy is not.
  VertexSet min_cut() const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> queue{source()};
    seen[source()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int a = head_[queue[i]]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < n_; ++v) {
      if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    }
    return VertexSet(std::move(cut));
  }

  /// Decomposes the flow into vertex paths.
  std::vector<Path> paths() {
    std::vector<Path> out;
    for (int first = head_[source()]; first != -1; first = arcs_[first].next) {
      // Forward arcs sit at even indices; flow on an arc shows as capacity
      // on its reverse twin.
      while (arcs_[first ^ 1].cap > 0) {
        arcs_[first ^ 1].cap -= 1;
        Path path;
        int node = arcs_[first].to;
        while (node != sink()) {
          if (node < 2 * n_ && node % 2 == 0) path.push_back(node / 2);
          int next = -1;
          for (int a = head_[node]; a != -1; a = arcs_[a].next) {
            if (a % 2 == 0 && arcs_[a ^ 1].cap > 0) {
              next = a;
              break;
            }
          }
          arcs_[next ^ 1].cap -= 1;
          node = arcs_[next].to;
        }
        out.push_back(std::move(path));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  Vertex n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

MengerResult menger_disjoint_paths(const Graph& g, const VertexSet& S, const VertexSet& T) {
  g.check_set(S);
  g.check_set(T);
  const SourceGroup all{S.ids(), std::numeric_limits<int>::max() / 2};
  SplitNetwork net(g, std::span<const SourceGroup>(&all, 1), T.ids(), {});
  MengerResult result;
  result.max_count = net.max_flow(std::numeric_limits<int>::max());
  result.min_cut = net.min_cut();
  result.paths = net.paths();
  return result;
}

int count_disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                         std::span<const Vertex> targets, std::span<const char> blocked, int limit) {
  const SourceGroup all{sources, std::numeric_limits<int>::max() / 2};
  SplitNetwork net(g, std::span<const SourceGroup>(&all, 1), targets, blocked);
  return net.max_flow(limit);
}

}  // namespace blockforge
