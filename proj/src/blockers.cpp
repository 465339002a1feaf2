#include "blockforge/blockers.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "blockforge/distance.hpp"
#include "blockforge/rng.hpp"

namespace blockforge {

namespace {

class EscapeTester {
 public:
  EscapeTester(const Graph& g, std::optional<Vertex> root, int ell, const VertexSet& S, const VertexSet& T)
      : g_(g), S_(S), T_(T), mark_(g.vertex_count(), 0), seen_(g.vertex_count(), 0),
        parent_(g.vertex_count(), -1), in_t_(g.vertex_count(), 0) {
    balls_.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto b = ball(g, VertexSet{v}, ell);
      balls_[v].assign(b.begin(), b.end());
    }
    if (root) root_ball_ = balls_[*root];
    for (Vertex t : T) in_t_[t] = 1;
  }

  /// Escape path for X, or nullopt if X + {root} covers.
  std::optional<Path> test(std::span<const Vertex> X) {
    const unsigned stamp = bump();
    for (Vertex v : root_ball_) mark_[v] = stamp;
    for (Vertex x : X) {
      for (Vertex v : balls_[x]) mark_[v] = stamp;
    }
    queue_.clear();
    for (Vertex s : S_) {
      if (mark_[s] == stamp || seen_[s] == stamp) continue;
      seen_[s] = stamp;
      parent_[s] = -1;
      queue_.push_back(s);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex u = queue_[head];
      if (in_t_[u]) {
        Path path;
        for (Vertex v = u; v != -1; v = parent_[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (Vertex w : g_.neighbors(u)) {
        if (mark_[w] == stamp || seen_[w] == stamp) continue;
        seen_[w] = stamp;
        parent_[w] = u;
        queue_.push_back(w);
      }
    }
    return std::nullopt;
  }

 private:
  unsigned bump() {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    return stamp_;
  }

  const Graph& g_;
  const VertexSet& S_;
  const VertexSet& T_;
  std::vector<std::vector<Vertex>> balls_;
  std::vector<Vertex> root_ball_;
  std::vector<unsigned> mark_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<Vertex> parent_;
  std::vector<char> in_t_;
  std::vector<Vertex> queue_;
};

struct ChunkResult {
  std::uint64_t tested = 0;
  std::optional<VertexSet> covering;
  std::vector<EscapeWitness> witnesses;
};

// Calls visit(X) for each subset in the chunk until it returns false.
using ChunkFn = std::function<void(std::size_t, const std::function<bool(std::span<const Vertex>)>&)>;

ChunkResult run_chunk(EscapeTester& tester, std::size_t index, const ChunkFn& chunks, bool record,
                      const std::atomic<std::size_t>* cutoff) {
  ChunkResult result;
  chunks(index, [&](std::span<const Vertex> X) {
    if (cutoff != nullptr && (result.tested & 255) == 0 && cutoff->load(std::memory_order_relaxed) < index) {
      return false;
    }
    ++result.tested;
    auto path = tester.test(X);
    if (!path) {
      result.covering = VertexSet(std::vector<Vertex>(X.begin(), X.end()));
      return false;
    }
    if (record) result.witnesses.push_back({VertexSet(std::vector<Vertex>(X.begin(), X.end())), std::move(*path)});
    return true;
  });
  return result;
}

// Deterministic reduction over chunks: the first covering chunk in index
// order wins, counts stop there, whatever the worker count.
void run_chunks(const Block& b, int ell, std::size_t count, const ChunkFn& chunks,
                const BlockerOptions& options, BlockerReport& report) {
  std::vector<ChunkResult> results(count);
  auto make_tester = [&] { return EscapeTester(b.graph, b.root, ell, b.S, b.T); };

  if (options.workers > 1 && count > 1) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> cutoff{count};
    auto worker = [&] {
      EscapeTester tester = make_tester();
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        if (i > cutoff.load()) continue;
        results[i] = run_chunk(tester, i, chunks, options.record_witnesses, &cutoff);
        if (results[i].covering) {
          std::size_t seen = cutoff.load();
          while (i < seen && !cutoff.compare_exchange_weak(seen, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    EscapeTester tester = make_tester();
    for (std::size_t i = 0; i < count; ++i) {
      results[i] = run_chunk(tester, i, chunks, options.record_witnesses, nullptr);
      if (results[i].covering) break;
    }
  }

  report.verdict = BlockerVerdict::kAllEscaped;
  for (auto& r : results) {
    report.subsets_tested += r.tested;
    if (options.record_witnesses) {
      for (auto& w : r.witnesses) report.witnesses.push_back(std::move(w));
    }
    if (r.covering) {
      report.verdict = BlockerVerdict::kCoveredBy;
      report.covering = std::move(r.covering);
      break;
    }
  }
}

// Lexicographic combinations of `pool` of the given size whose first
// element is pool[first].
bool for_each_combination(std::span<const Vertex> pool, int size, std::size_t first,
                          const std::function<bool(std::span<const Vertex>)>& visit) {
  if (size == 0) return visit({});
  std::vector<std::size_t> idx(size);
  idx[0] = first;
  for (int i = 1; i < size; ++i) idx[i] = first + i;
  if (idx.back() >= pool.size()) return true;
  std::vector<Vertex> X(size);
  while (true) {
    for (int i = 0; i < size; ++i) X[i] = pool[idx[i]];
    if (!visit(X)) return false;
    int i = size - 1;
    while (i >= 1 && idx[i] == pool.size() - size + i) --i;
    if (i == 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<Vertex>> sampled_sets(const Block& b, int size_bound, const BlockerOptions& options) {
  const Graph& g = b.graph;
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::vector<std::vector<Vertex>> sets;

  // Adversarial battery: S, T, port sets (top level first by id) and hubs.
  std::vector<Vertex> pool;
  auto add = [&](Vertex v) {
    if (v != b.root && std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
  };
  for (Vertex v : b.S) add(v);
  for (Vertex v : b.T) add(v);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto tag = g.role(v).tag;
    if (tag == VertexRole::Tag::kAnchor || tag == VertexRole::Tag::kPort) add(v);
    if (pool.size() >= options.battery_pool) break;
  }
  std::vector<Vertex> hubs(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) hubs[v] = v;
  std::stable_sort(hubs.begin(), hubs.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  for (std::size_t i = 0; i < hubs.size() && i < 16; ++i) add(hubs[i]);
  if (pool.size() > options.battery_pool) pool.resize(options.battery_pool);
  std::sort(pool.begin(), pool.end());

  const int battery_size = std::min<int>(size_bound, static_cast<int>(pool.size()));
  for (std::size_t first = 0; first < std::max<std::size_t>(pool.size(), 1); ++first) {
    bool more = for_each_combination(pool, battery_size, first, [&](std::span<const Vertex> X) {
      if (sets.size() >= options.battery_limit) return false;
      sets.emplace_back(X.begin(), X.end());
      return true;
    });
    if (!more || battery_size == 0) break;
  }

  std::mt19937_64 rng(options.seed);
  const auto k = static_cast<std::uint64_t>(std::min<std::uint64_t>(size_bound, n));
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    // Floyd's algorithm: uniform k-subset of [0, n).
    std::vector<Vertex> X;
    for (std::uint64_t j = n - k; j < n; ++j) {
      auto r = static_cast<Vertex>(uniform_below(rng, j + 1));
      if (std::find(X.begin(), X.end(), r) == X.end()) {
        X.push_back(r);
      } else {
        X.push_back(static_cast<Vertex>(j));
      }
    }
    std::sort(X.begin(), X.end());
    sets.push_back(std::move(X));
  }
  return sets;
}

}  // namespace

std::string to_string(BlockerMode m) { return m == BlockerMode::kExhaustive ? "exhaustive" : "sampled"; }

std::string to_string(BlockerVerdict v) {
  switch (v) {
    case BlockerVerdict::kAllEscaped:
      return "all_escaped";
    case BlockerVerdict::kCoveredBy:
      return "covered_by";
    case BlockerVerdict::kRefused:
      return "refused";
  }
  return "unknown";
}

std::optional<Path> escape_path(const Graph& g, std::optional<Vertex> root, const VertexSet& X, int ell,
                                const VertexSet& S, const VertexSet& T) {
  if (ell < 0) throw InputError("ell must be nonnegative");
  VertexSet centers = X;
  if (root) centers = centers.united({*root});
  return shortest_path_avoiding(g, S, T, ball(g, centers, ell));
}

std::uint64_t subsets_up_to(std::uint64_t n, int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n, i)
  for (int i = 0; i <= k && static_cast<std::uint64_t>(i) <= n; ++i) {
    if (i > 0) {
      // term * (n - i + 1) / i stays exact because C(n, i-1) * (n-i+1) is divisible by i.
      const std::uint64_t mult = n - i + 1;
      if (term > kMax / mult) return kMax;
      term = term * mult / i;
    }
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

BlockerReport verify_blockers(const Block& b, int size_bound, const BlockerOptions& options) {
  if (size_bound < 0) throw InputError("size bound must be nonnegative");
  BlockerReport report;
  report.size_bound = size_bound;
  report.ell = b.params.ell;
  report.mode = options.mode;
  const Graph& g = b.graph;

  if (options.mode == BlockerMode::kExhaustive) {
    report.subsets_required = subsets_up_to(g.vertex_count(), size_bound);
    if (report.subsets_required > options.subset_cap) {
      report.verdict = BlockerVerdict::kRefused;
      return report;
    }
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    const std::size_t n = all.size();
    // Chunk 0 is the empty set; chunk 1 + (i-1)*n + a holds the size-i
    // sets starting at vertex a.
    const std::size_t count = 1 + static_cast<std::size_t>(size_bound) * n;
    ChunkFn chunks = [&](std::size_t index, const std::function<bool(std::span<const Vertex>)>& visit) {
      if (index == 0) {
        visit({});
        return;
      }
      const int size = static_cast<int>((index - 1) / n) + 1;
      const std::size_t first = (index - 1) % n;
      for_each_combination(all, size, first, visit);
    };
    run_chunks(b, b.params.ell, count, chunks, options, report);
    return report;
  }

  report.seed = options.seed;
  report.trials = options.trials;
  const auto sets = sampled_sets(b, size_bound, options);
  constexpr std::size_t kChunk = 256;
  const std::size_t count = (sets.size() + kChunk - 1) / kChunk;
  ChunkFn chunks = [&](std::size_t index, const std::function<bool(std::span<const Vertex>)>& visit) {
    for (std::size_t i = index * kChunk; i < std::min(sets.size(), (index + 1) * kChunk); ++i) {
      if (!visit(sets[i])) return;
    }
  };
  run_chunks(b, b.params.ell, count, chunks, options, report);
  return report;
}

}  // namespace blockforge
