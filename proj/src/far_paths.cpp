#include "blockforge/far_paths.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "blockforge/menger.hpp"

namespace blockforge {

// Why enumerating induced paths is enough: take any witness tuple. Shrink
// each path to a minimal S-T subpath (no interior vertex in S or T), then
// replace it by a shortest path inside its own vertex set, which is
// induced. Neither step adds vertices, so pairwise distances cannot drop.
// Distance >= 1 forces disjointness, so the paths have distinct first
// vertices and can be listed by ascending start. The search enumerates
// exactly such normalised tuples: path j is induced, has no interior
// vertex in S or T, starts above path j-1 and avoids the radius c-1 balls
// of paths 0..j-1 (dist(P, Q) >= c iff Q misses ball(P, c-1)). The last
// path only has to exist, so BFS finds it.
//
// Pruning only ever discards partial paths that cannot be finished, since
// balls grow as a path is extended: the remaining paths must fit outside
// the balls (residual), the path itself must still reach T (dead end), and
// with one path left, whatever the last path is forced through bans a ball
// for the completion and vice versa (corridor).

namespace {

using BallTable = std::vector<std::vector<Vertex>>;

BallTable make_balls(const Graph& g, int radius) {
  BallTable balls(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto b = ball(g, VertexSet{v}, radius);
    balls[v].assign(b.begin(), b.end());
  }
  return balls;
}

struct Stop {
  bool exceeded;
};

struct Branch {
  Vertex start;
  std::optional<Vertex> first_step;  // absent for a one-vertex path
};

constexpr int kCorridorRounds = 8;

class Searcher {
 public:
  Searcher(const Graph& g, const FarPathQuery& q, const BallTable& balls, std::uint64_t limit,
           const std::atomic<int>* cutoff, int branch_index)
      : g_(g),
        q_(q),
        balls_(balls),
        limit_(limit),
        cutoff_(cutoff),
        branch_index_(branch_index),
        n_(static_cast<std::size_t>(g.vertex_count())),
        in_s_(n_, 0),
        in_t_(n_, 0),
        cover_(n_, 0),
        own_(q.k, std::vector<int>(n_, 0)),
        near_(q.k, std::vector<int>(n_, 0)),
        paths_(q.k),
        mark_(n_, 0),
        parent_(n_, -1),
        first_mark_(n_, 0),
        pos_(n_, -1),
        ban_last_(n_, 0),
        ban_tail_(n_, 0),
        completion_(q.k) {
    for (Vertex v : q.S) in_s_[v] = 1;
    for (Vertex v : q.T) in_t_[v] = 1;
    for (Vertex v : q.forbidden) cover_[v] = 1;
  }

  /// True if the branch produced a witness. Throws Stop.
  bool run(const Branch& branch) { return start_path(0, branch.start, branch.first_step); }

  const SearchStats& stats() const { return stats_; }
  const std::vector<Path>& witness() const { return witness_; }

 private:
  void count_node() {
    if (++stats_.nodes > limit_) throw Stop{true};
    if (cutoff_ != nullptr && (stats_.nodes & 1023) == 0 &&
        cutoff_->load(std::memory_order_relaxed) < branch_index_) {
      throw Stop{false};
    }
  }

  void push(int j, Vertex x) {
    paths_[j].push_back(x);
    for (Vertex w : balls_[x]) {
      ++own_[j][w];
      ++cover_[w];
    }
    ++near_[j][x];
    for (Vertex w : g_.neighbors(x)) ++near_[j][w];
  }

  void pop(int j) {
    Vertex x = paths_[j].back();
    paths_[j].pop_back();
    for (Vertex w : balls_[x]) {
      --own_[j][w];
      --cover_[w];
    }
    --near_[j][x];
    for (Vertex w : g_.neighbors(x)) --near_[j][w];
  }

  // Free of the forbidden set and of the balls around paths 0..j-1.
  bool outer_free(int j, Vertex v) const { return cover_[v] == own_[j][v]; }

  // w is a neighbour of the tip of path j.
  bool extends(int j, Vertex w) const { return near_[j][w] == 1 && outer_free(j, w) && !in_s_[w]; }

  unsigned next_stamp() {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    return stamp_;
  }

  // Can the remaining k-1-j paths start above `min_start` outside every
  // ball so far? With one path left, BFS (optionally returning the path);
  // otherwise a vertex-disjoint flow bound.
  bool residual(int j, Vertex min_start, Path* out) {
    const int remaining = q_.k - 1 - j;
    if (remaining == 1) {
      // Balls only grow along a branch, so the last path found usually
      // survives; re-check it before searching again.
      if (!last_path_.empty() && last_path_.front() > min_start &&
          std::all_of(last_path_.begin(), last_path_.end(), [&](Vertex v) { return cover_[v] == 0; })) {
        if (out != nullptr) *out = last_path_;
        return true;
      }
      const unsigned stamp = next_stamp();
      queue_.clear();
      for (Vertex s : q_.S) {
        if (s > min_start && cover_[s] == 0) {
          mark_[s] = stamp;
          parent_[s] = -1;
          queue_.push_back(s);
        }
      }
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        Vertex u = queue_[head];
        if (in_t_[u]) {
          last_path_.clear();
          for (Vertex v = u; v != -1; v = parent_[v]) last_path_.push_back(v);
          std::reverse(last_path_.begin(), last_path_.end());
          if (out != nullptr) *out = last_path_;
          return true;
        }
        for (Vertex w : g_.neighbors(u)) {
          if (mark_[w] == stamp || cover_[w] != 0) continue;
          mark_[w] = stamp;
          parent_[w] = u;
          queue_.push_back(w);
        }
      }
      return false;
    }
    blocked_.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) blocked_[v] = cover_[v] != 0;
    std::vector<Vertex> sources;
    for (Vertex s : q_.S) {
      if (s > min_start) sources.push_back(s);
    }
    return count_disjoint_paths(g_, sources, q_.T.ids(), blocked_, remaining) >= remaining;
  }

  // Can the induced path j still be completed to T?
  bool completable(int j) {
    const Vertex tip = paths_[j].back();
    Path& cached = completion_[j];
    if (!cached.empty() && std::ranges::find(g_.neighbors(tip), cached.front()) != g_.neighbors(tip).end() && extends(j, cached.front()) &&
        std::all_of(cached.begin() + 1, cached.end(),
                    [&](Vertex w) { return near_[j][w] == 0 && outer_free(j, w) && !in_s_[w]; })) {
      return true;
    }
    const unsigned stamp = next_stamp();
    queue_.clear();
    auto found = [&](Vertex w) {
      cached.clear();
      for (Vertex v = w; v != -1; v = parent_[v]) cached.push_back(v);
      std::reverse(cached.begin(), cached.end());
      return true;
    };
    for (Vertex w : g_.neighbors(tip)) {
      if (!extends(j, w)) continue;
      parent_[w] = -1;
      if (in_t_[w]) return found(w);
      mark_[w] = stamp;
      queue_.push_back(w);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex u = queue_[head];
      for (Vertex w : g_.neighbors(u)) {
        if (mark_[w] == stamp || near_[j][w] != 0 || !outer_free(j, w) || in_s_[w]) continue;
        parent_[w] = u;
        if (in_t_[w]) return found(w);
        mark_[w] = stamp;
        queue_.push_back(w);
      }
    }
    return false;
  }

  // Relaxed path search behind the corridor prune. Paths start at a
  // vertex of `starts` passing first(v), continue through vertices passing
  // inner(v) and end in T. Moves are treated as undirected, which can only
  // add paths, so a vertex reported in `must` lies on every real path.
  // Returns false when no path exists at all.
  template <class First, class Inner>
  bool corridor(std::span<const Vertex> starts, First first, Inner inner, std::vector<Vertex>& must) {
    const unsigned fs = next_stamp();
    for (Vertex s : starts) {
      if (first(s)) first_mark_[s] = fs;
    }
    auto usable = [&](Vertex v) { return first_mark_[v] == fs || inner(v); };

    const unsigned stamp = next_stamp();
    queue_.clear();
    for (Vertex s : starts) {
      if (first_mark_[s] == fs && mark_[s] != stamp) {
        mark_[s] = stamp;
        parent_[s] = -1;
        queue_.push_back(s);
      }
    }
    Vertex end = -1;
    for (std::size_t head = 0; head < queue_.size() && end == -1; ++head) {
      const Vertex u = queue_[head];
      if (in_t_[u]) {
        end = u;
        break;
      }
      for (Vertex w : g_.neighbors(u)) {
        if (mark_[w] == stamp || !usable(w)) continue;
        mark_[w] = stamp;
        parent_[w] = u;
        queue_.push_back(w);
      }
    }
    if (end == -1) return false;

    ref_.clear();
    for (Vertex v = end; v != -1; v = parent_[v]) ref_.push_back(v);
    std::reverse(ref_.begin(), ref_.end());
    const int len = static_cast<int>(ref_.size());  // positions 0..len-1, source -1, sink len
    for (int i = 0; i < len; ++i) pos_[ref_[i]] = i;

    // cover[i + 1] counts the bypasses strictly around position i
    cover_diff_.assign(len + 2, 0);
    auto bypass = [&](int lo, int hi) {
      if (hi - lo < 2) return;
      ++cover_diff_[lo + 2];
      --cover_diff_[hi + 1];
    };
    for (int i = 0; i < len; ++i) {
      const Vertex q = ref_[i];
      if (first_mark_[q] == fs) bypass(-1, i);
      if (in_t_[q]) bypass(i, len);
      for (Vertex w : g_.neighbors(q)) {
        if (pos_[w] > i) bypass(i, pos_[w]);
      }
    }
    // components of usable vertices off the reference path
    const unsigned comp = next_stamp();
    auto explore = [&](Vertex x) {
      int lo = len, hi = -1;
      mark_[x] = comp;
      stack_.assign(1, x);
      while (!stack_.empty()) {
        const Vertex u = stack_.back();
        stack_.pop_back();
        if (first_mark_[u] == fs) lo = -1;
        if (in_t_[u]) hi = len;
        for (Vertex w : g_.neighbors(u)) {
          if (pos_[w] >= 0) {
            lo = std::min(lo, pos_[w]);
            hi = std::max(hi, pos_[w]);
          } else if (mark_[w] != comp && usable(w)) {
            mark_[w] = comp;
            stack_.push_back(w);
          }
        }
      }
      if (hi > lo) bypass(lo, hi);
    };
    for (Vertex s : starts) {
      if (first_mark_[s] == fs && pos_[s] < 0 && mark_[s] != comp) explore(s);
    }
    for (Vertex q : ref_) {
      for (Vertex w : g_.neighbors(q)) {
        if (pos_[w] < 0 && mark_[w] != comp && usable(w)) explore(w);
      }
    }

    must.clear();
    int covered = 0;
    for (int i = 0; i < len; ++i) {
      covered += cover_diff_[i + 1];
      if (covered == 0) must.push_back(ref_[i]);
    }
    for (Vertex q : ref_) pos_[q] = -1;
    return true;
  }

  // With one path left after path j: the last path and the completion of
  // path j must each avoid the (c-1)-ball around whatever the other one is
  // forced through. Alternate the two until nothing new is forced.
  bool corridors(int j, Vertex min_start) {
    if (++ban_epoch_ == 0) {
      std::fill(ban_last_.begin(), ban_last_.end(), 0);
      std::fill(ban_tail_.begin(), ban_tail_.end(), 0);
      ban_epoch_ = 1;
    }
    const unsigned e = ban_epoch_;
    auto last_first = [&](Vertex s) { return s > min_start && cover_[s] == 0 && ban_last_[s] != e; };
    auto last_inner = [&](Vertex v) { return cover_[v] == 0 && ban_last_[v] != e; };
    auto tail_first = [&](Vertex w) { return extends(j, w) && ban_tail_[w] != e; };
    auto tail_inner = [&](Vertex v) {
      return near_[j][v] == 0 && outer_free(j, v) && !in_s_[v] && ban_tail_[v] != e;
    };
    auto ban = [&](std::vector<unsigned>& banned) {
      bool grew = false;
      for (Vertex m : must_) {
        for (Vertex w : balls_[m]) {
          if (banned[w] != e) {
            banned[w] = e;
            grew = true;
          }
        }
      }
      return grew;
    };
    for (int round = 0; round < kCorridorRounds; ++round) {
      if (!corridor(q_.S.ids(), last_first, last_inner, must_)) return false;
      if (!ban(ban_tail_)) return true;
      if (!corridor(g_.neighbors(paths_[j].back()), tail_first, tail_inner, must_)) return false;
      if (!ban(ban_last_)) return true;
    }
    return true;
  }

  // Path j just reached T.
  bool complete(int j) {
    const Vertex start = paths_[j].front();
    if (q_.k - 1 - j == 1) {
      Path last;
      if (!residual(j, start, &last)) {
        ++stats_.prunes_residual;
        return false;
      }
      witness_.assign(paths_.begin(), paths_.begin() + j + 1);
      witness_.push_back(std::move(last));
      return true;
    }
    if (!residual(j, start, nullptr)) {
      ++stats_.prunes_residual;
      return false;
    }
    return level(j + 1, start);
  }

  bool level(int j, Vertex min_start) {
    for (Vertex s : q_.S) {
      if (s > min_start && cover_[s] == 0 && start_path(j, s, std::nullopt)) return true;
    }
    return false;
  }

  bool start_path(int j, Vertex s, std::optional<Vertex> first_step) {
    count_node();
    push(j, s);
    bool found = false;
    if (in_t_[s]) {
      found = complete(j);
    } else if (!residual(j, s, nullptr)) {
      ++stats_.prunes_residual;
    } else if (!completable(j)) {
      ++stats_.prunes_dead_end;
    } else if (q_.k - 1 - j == 1 && !corridors(j, s)) {
      ++stats_.prunes_corridor;
    } else {
      found = extend(j, first_step);
    }
    if (!found) pop(j);
    return found;
  }

  // Depth-first enumeration of induced extensions of path j.
  bool extend(int j, std::optional<Vertex> first_step) {
    Path& path = paths_[j];
    const Vertex start = path.front();
    std::vector<std::size_t> next{0};
    while (!next.empty()) {
      const auto nbrs = g_.neighbors(path.back());
      std::size_t& i = next.back();
      if (i == nbrs.size()) {
        next.pop_back();
        if (!next.empty()) pop(j);
        continue;
      }
      const Vertex w = nbrs[i++];
      if (first_step && next.size() == 1 && w != *first_step) continue;
      if (!extends(j, w)) continue;
      count_node();
      push(j, w);
      if (in_t_[w]) {
        if (complete(j)) return true;
        pop(j);
        continue;
      }
      if (!residual(j, start, nullptr)) {
        ++stats_.prunes_residual;
        pop(j);
        continue;
      }
      if (!completable(j)) {
        ++stats_.prunes_dead_end;
        pop(j);
        continue;
      }
      if (q_.k - 1 - j == 1 && !corridors(j, start)) {
        ++stats_.prunes_corridor;
        pop(j);
        continue;
      }
      next.push_back(0);
    }
    return false;
  }

  const Graph& g_;
  const FarPathQuery& q_;
  const BallTable& balls_;
  std::uint64_t limit_;
  const std::atomic<int>* cutoff_;
  int branch_index_;
  std::size_t n_;

  std::vector<char> in_s_;
  std::vector<char> in_t_;
  std::vector<int> cover_;              // forbidden + balls of every path on the stack
  std::vector<std::vector<int>> own_;   // ball counts of path j alone
  std::vector<std::vector<int>> near_;  // closed-neighbourhood counts of path j
  std::vector<Path> paths_;

  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
  std::vector<char> blocked_;
  std::vector<unsigned> first_mark_;
  std::vector<int> pos_;  // index on the corridor reference path, -1 elsewhere
  std::vector<int> cover_diff_;
  std::vector<Vertex> ref_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> must_;
  std::vector<unsigned> ban_last_;
  std::vector<unsigned> ban_tail_;
  unsigned ban_epoch_ = 0;
  Path last_path_;               // last path found by the one-path residual
  std::vector<Path> completion_;  // last completion found for each path

  SearchStats stats_;
  std::vector<Path> witness_;
};

struct BranchResult {
  SearchStats stats;
  bool witness = false;
  bool exceeded = false;
  std::vector<Path> paths;
};

BranchResult run_branch(const Graph& g, const FarPathQuery& q, const BallTable& balls,
                        const Branch& branch, std::uint64_t limit, const std::atomic<int>* cutoff,
                        int index) {
  Searcher searcher(g, q, balls, limit, cutoff, index);
  BranchResult result;
  try {
    result.witness = searcher.run(branch);
  } catch (const Stop& stop) {
    result.exceeded = stop.exceeded;
  }
  result.stats = searcher.stats();
  if (result.witness) result.paths = searcher.witness();
  return result;
}

}  // namespace

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kWitness:
      return "witness";
    case SearchOutcome::kExhaustedNoWitness:
      return "exhausted_no_witness";
    case SearchOutcome::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

void FarPathQuery::validate(const Graph& g) const {
  if (k < 1) throw InputError("k must be at least 1");
  if (c < 1) throw InputError("c must be at least 1");
  g.check_set(S);
  g.check_set(T);
  g.check_set(forbidden);
}

SearchCertificate find_far_paths(const Graph& g, const FarPathQuery& query, const SearchOptions& options) {
  query.validate(g);
  SearchCertificate cert;

  auto finish_witness = [&](std::vector<Path> paths) {
    cert.outcome = SearchOutcome::kWitness;
    FarPathWitness w;
    w.paths = std::move(paths);
    w.certified_min_pairwise_distance = min_pairwise_distance(g, w.paths);
    cert.witness = std::move(w);
  };

  if (query.k == 1) {
    auto path = shortest_path_avoiding(g, query.S, query.T, query.forbidden);
    if (path) {
      finish_witness({*path});
    } else {
      cert.outcome = SearchOutcome::kExhaustedNoWitness;
    }
    return cert;
  }

  std::vector<Branch> branches;
  for (Vertex s : query.S) {
    if (query.forbidden.contains(s)) continue;
    if (query.T.contains(s)) {
      branches.push_back({s, std::nullopt});
      continue;
    }
    for (Vertex w : g.neighbors(s)) {
      if (!query.forbidden.contains(w) && !query.S.contains(w)) branches.push_back({s, w});
    }
  }

  const BallTable balls = make_balls(g, query.c - 1);
  const int count = static_cast<int>(branches.size());
  std::vector<BranchResult> results(count);
  std::vector<char> ran(count, 0);

  if (options.workers > 1 && count > 1) {
    std::atomic<int> next{0};
    std::atomic<int> cutoff{count};
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        if (i > cutoff.load()) continue;
        results[i] = run_branch(g, query, balls, branches[i], query.budget, &cutoff, i);
        ran[i] = 1;
        if (results[i].witness || results[i].exceeded) {
          int seen = cutoff.load();
          while (i < seen && !cutoff.compare_exchange_weak(seen, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Reduce in branch order exactly as a serial run would.
  std::uint64_t used = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t remaining = query.budget - used;
    BranchResult r;
    if (ran[i] && !results[i].exceeded && results[i].stats.nodes <= remaining) {
      r = std::move(results[i]);
    } else {
      r = run_branch(g, query, balls, branches[i], remaining, nullptr, i);
    }
    cert.stats += r.stats;
    used += r.stats.nodes;
    if (r.exceeded) {
      cert.outcome = SearchOutcome::kBudgetExceeded;
      return cert;
    }
    if (r.witness) {
      finish_witness(std::move(r.paths));
      return cert;
    }
  }
  cert.outcome = SearchOutcome::kExhaustedNoWitness;
  return cert;
}

Distance min_pairwise_distance(const Graph& g, const std::vector<Path>& paths) {
  Distance best;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto dist = bfs_distances(g, paths[i]);
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      for (Vertex v : paths[j]) {
        if (dist[v] != kUnreached && (!best || dist[v] < *best)) best = dist[v];
      }
    }
  }
  return best;
}

std::vector<std::string> validate_witness(const Graph& g, const FarPathQuery& query,
                                          const FarPathWitness& witness) {
  std::vector<std::string> problems;
  if (witness.paths.size() != static_cast<std::size_t>(query.k)) problems.push_back("wrong number of paths");
  for (std::size_t i = 0; i < witness.paths.size(); ++i) {
    const Path& p = witness.paths[i];
    const std::string name = "path " + std::to_string(i);
    if (!is_valid_path(g, p)) {
      problems.push_back(name + " is not a path of the graph");
      continue;
    }
    if (!query.S.contains(p.front())) problems.push_back(name + " does not start in S");
    if (!query.T.contains(p.back())) problems.push_back(name + " does not end in T");
    for (Vertex v : p) {
      if (query.forbidden.contains(v)) problems.push_back(name + " uses a forbidden vertex");
    }
  }
  if (!problems.empty()) return problems;
  for (std::size_t i = 0; i < witness.paths.size(); ++i) {
    for (std::size_t j = i + 1; j < witness.paths.size(); ++j) {
      auto d = distance_between_sets(g, VertexSet(witness.paths[i]), VertexSet(witness.paths[j]));
      if (d && *d < query.c) {
        problems.push_back("paths " + std::to_string(i) + " and " + std::to_string(j) + " at distance " +
                           std::to_string(*d));
      }
    }
  }
  return problems;
}

}  // namespace blockforge
