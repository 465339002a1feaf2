// One PASS/FAIL line per acceptance criterion. Runtime limits are pinned
// below and count as part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "blockforge/block.hpp"
#include "blockforge/blockers.hpp"
#include "blockforge/brute_force.hpp"
#include "blockforge/distance.hpp"
#include "blockforge/document.hpp"
#include "blockforge/far_paths.hpp"
#include "blockforge/menger.hpp"
#include "blockforge/oracle.hpp"
#include "blockforge/report.hpp"
#include "blockforge/verify.hpp"
#include "support.hpp"

using namespace blockforge;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kSecond = 1.0;
constexpr double kMinute = 60.0;

// Failure notes collected while a criterion runs.
struct Notes {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Notes&)>& body) {
  Notes notes;
  const auto t0 = Clock::now();
  try {
    body(notes);
  } catch (const std::exception& e) {
    notes.problems.push_back(std::string("exception: ") + e.what());
  }
  const double took = std::chrono::duration<double>(Clock::now() - t0).count();
  if (took > limit_seconds) {
    std::ostringstream os;
    os << "took " << took << " s, limit " << limit_seconds << " s";
    notes.problems.push_back(os.str());
  }
  const bool ok = notes.problems.empty();
  failures += !ok;
  std::printf("%s %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), took);
  for (const auto& p : notes.problems) std::printf("       %s\n", p.c_str());
  std::fflush(stdout);
}

std::string str(std::uint64_t x) { return std::to_string(x); }

BlockSize counted_size(int ell, int m) {
  if (m == 1) return {static_cast<std::uint64_t>(2 * ell + 3), static_cast<std::uint64_t>(2 * ell + 1)};
  const std::uint64_t n = 1ull << (2 * ell + 1);
  const std::uint64_t ports = n * (m - 1);
  const BlockSize h = counted_size(ell, m - 1);
  return {(n - 1) + ports * (2 * ell + 1) + (n - 1) * (h.vertices - 2 * (m - 1) - 1),
          (n - 2) + ports * (2 * ell + 1) + (n - 1) * h.edges};
}

// Minimum distance between distinct members of `set`, and the root gap,
// computed with the test BFS.
std::pair<int, int> separation(const Block& b) {
  auto st = as_vector(b.S.united(b.T));
  int within = kFar;
  for (Vertex a : st) {
    auto d = plain_bfs(b.graph, {a});
    for (Vertex c : st) {
      if (c != a) within = std::min(within, d[c]);
    }
  }
  return {within, plain_distance(b.graph, {b.root}, st)};
}

std::string gap_text(int d) { return d == kFar ? "inf" : std::to_string(d); }

// Block with `spine` contracted to a single edge: interior vertices are
// dropped and the remaining ids renumbered in order.
Block shorten_spine(const Block& b, const Path& spine) {
  const int n = b.graph.vertex_count();
  std::vector<char> drop(n, 0);
  for (std::size_t i = 1; i + 1 < spine.size(); ++i) drop[spine[i]] = 1;
  std::vector<Vertex> id(n, -1);
  std::vector<VertexRole> roles;
  for (Vertex v = 0; v < n; ++v) {
    if (drop[v]) continue;
    id[v] = static_cast<Vertex>(roles.size());
    roles.push_back(b.graph.role(v));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : b.graph.edges()) {
    if (!drop[u] && !drop[v]) edges.emplace_back(id[u], id[v]);
  }
  edges.emplace_back(std::min(id[spine.front()], id[spine.back()]), std::max(id[spine.front()], id[spine.back()]));
  std::sort(edges.begin(), edges.end());
  auto remap = [&](const VertexSet& s) {
    std::vector<Vertex> out;
    for (Vertex v : s) out.push_back(id[v]);
    return VertexSet(out);
  };
  Block m;
  m.graph = Graph(roles, edges);
  m.root = id[b.root];
  m.S = remap(b.S);
  m.T = remap(b.T);
  m.params = b.params;
  return m;
}

void far_pair_exhausted(Notes& notes, const Block& b, const std::string& name) {
  auto q = far_pair_query(b);
  auto r = find_far_paths(b.graph, q);
  notes.require(r.outcome == SearchOutcome::kExhaustedNoWitness,
                name + " far pairs: " + to_string(r.outcome) + " after " + str(r.stats.nodes) + " nodes");
  std::printf("       %s: %s, %llu search nodes\n", name.c_str(), to_string(r.outcome).c_str(),
              static_cast<unsigned long long>(r.stats.nodes));
}

void blockers_escape(Notes& notes, const Block& b, int bound, std::uint64_t expected_sets, const std::string& name) {
  BlockerReport r = verify_blockers(b, bound);
  notes.require(r.verdict == BlockerVerdict::kAllEscaped, name + " blockers: " + to_string(r.verdict));
  notes.require(r.subsets_tested == expected_sets,
                name + " tested " + str(r.subsets_tested) + " sets, expected " + str(expected_sets));
}

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

std::string full_report(const Block& b, int workers) {
  VerifyOptions o;
  o.workers = workers;
  return format_document(verification_document(b, verify_block(b, o), "all"));
}

}  // namespace

int main() {
  criterion(1, "construction integrity", 1 * kSecond, [](Notes& n) {
    const std::uint64_t expect[] = {5, 45, 335};
    for (int m = 1; m <= 3; ++m) {
      const auto p = BlockParams::make(1, m);
      Block b = build_block(p);
      const BlockSize f = block_size_formula(p);
      const BlockSize c = counted_size(1, m);
      const std::string tag = "(1," + std::to_string(m) + ")";
      n.require(static_cast<std::uint64_t>(b.graph.vertex_count()) == expect[m - 1], tag + " vertex count");
      n.require(f == c, tag + " formula disagrees with the independent count");
      n.require(static_cast<std::uint64_t>(b.graph.vertex_count()) == f.vertices && b.graph.edge_count() == f.edges,
                tag + " builder disagrees with the formula");
      std::size_t roots = 0;
      for (const auto& r : b.graph.roles()) roots += r.tag == VertexRole::Tag::kRoot;
      n.require(roots == 1, tag + " root count " + std::to_string(roots));
      n.require(b.S.size() == static_cast<std::size_t>(m) && b.T.size() == static_cast<std::size_t>(m),
                tag + " |S| or |T|");
    }
  });

  criterion(2, "explicit (l,2) construction and anchor wiring", 1 * kSecond, [](Notes& n) {
    n.require(serialize(build_l2_explicit(1)) == serialize(build_block(BlockParams::make(1, 2))),
              "serializations differ");
    using P = std::pair<int, int>;
    n.require(anchor_attachment(1, 32) == P{1, 3}, "k=1");
    n.require(anchor_attachment(2, 32) == P{2, 5}, "k=2");
    n.require(anchor_attachment(16, 32) == P{30, 32}, "k=16");
  });

  criterion(3, "distance separation", 1 * kSecond, [](Notes& n) {
    for (int m = 1; m <= 3; ++m) {
      Block b = build_block(BlockParams::make(1, m));
      auto [within, gap] = separation(b);
      DistanceReport r = verify_distances(b);
      const std::string tag = "(1," + std::to_string(m) + ")";
      n.require(within >= 3, tag + " min distance within S+T is " + gap_text(within));
      n.require(gap >= 2, tag + " root gap is " + gap_text(gap));
      n.require(r.status == CheckStatus::kPass, tag + " distance report fails");
      n.require(r.min_within.value_or(kFar) == within && r.root_gap.value_or(kFar) == gap,
                tag + " report disagrees with the test BFS");
      std::printf("       (1,%d): min within S+T = %s, root gap = %s\n", m, gap_text(within).c_str(),
                  gap_text(gap).c_str());
    }
  });

  criterion(4, "no far pair avoiding the root in (1,2) and (1,3)", 10 * kMinute, [](Notes& n) {
    const auto t0 = Clock::now();
    far_pair_exhausted(n, build_block(BlockParams::make(1, 2)), "(1,2)");
    const double small = std::chrono::duration<double>(Clock::now() - t0).count();
    n.require(small < 10 * kSecond, "(1,2) took " + std::to_string(small) + " s, limit 10 s");
    far_pair_exhausted(n, build_block(BlockParams::make(1, 3)), "(1,3)");
  });

  criterion(5, "counterexample: no three far paths, two exist", 15 * kMinute, [](Notes& n) {
    for (int mb = 1; mb <= 2; ++mb) {
      CounterexampleInstance ce = assemble_counterexample(1, mb);
      const std::string tag = "counterexample(1," + std::to_string(mb) + ")";
      FarPathQuery q;
      q.S = ce.S_prime;
      q.T = ce.T_prime;
      q.k = 3;
      q.c = 3;
      auto three = find_far_paths(ce.graph, q);
      n.require(three.outcome == SearchOutcome::kExhaustedNoWitness, tag + " k=3: " + to_string(three.outcome));
      q.k = 2;
      auto two = find_far_paths(ce.graph, q);
      if (two.outcome != SearchOutcome::kWitness || !two.witness) {
        n.require(false, tag + " k=2: " + to_string(two.outcome));
        continue;
      }
      const auto& p = two.witness->paths;
      n.require(p.size() == 2, tag + " witness size");
      if (p.size() != 2) continue;
      bool ends_ok = true;
      for (const auto& path : p) {
        ends_ok &= is_valid_path(ce.graph, path) && ce.S_prime.contains(path.front()) &&
                   ce.T_prime.contains(path.back());
      }
      n.require(ends_ok, tag + " witness paths are not S'-T' paths");
      const int d = plain_distance(ce.graph, p[0], p[1]);
      n.require(d >= 3, tag + " witness distance re-measured as " + gap_text(d));
    }
  });

  criterion(6, "no small blockers in (1,2) and (1,3)", 1 * kMinute, [](Notes& n) {
    blockers_escape(n, build_block(BlockParams::make(1, 2)), 1, 1 + 45, "(1,2)");
    blockers_escape(n, build_block(BlockParams::make(1, 3)), 2, 1 + 335 + choose2(335), "(1,3)");
  });

  criterion(7, "degree-3 variant", 15 * kMinute, [](Notes& n) {
    for (int m = 2; m <= 3; ++m) {
      Block b = build_block_degree3(BlockParams::make(1, m));
      const std::string tag = "degree3(1," + std::to_string(m) + ")";
      int max_deg = 0;
      for (Vertex v = 0; v < b.graph.vertex_count(); ++v) {
        if (v != b.root) max_deg = std::max(max_deg, b.graph.degree(v));
      }
      n.require(max_deg <= 3, tag + " max degree off the root is " + std::to_string(max_deg));
      const std::uint64_t v = b.graph.vertex_count();
      blockers_escape(n, b, m - 1, m == 2 ? 1 + v : 1 + v + choose2(v), tag);
      far_pair_exhausted(n, b, tag);
    }
  });

  criterion(8, "solver matches brute force on 500 random graphs", 5 * kMinute, [](Notes& n) {
    OracleSummary s = run_oracle_corpus(2024, 500, kBruteForceMaxVertices);
    n.require(s.instances == 500, "instances " + str(s.instances));
    n.require(s.comparisons == 500 * 6, "comparisons " + str(s.comparisons));
    n.require(s.menger_checks == 500, "menger checks " + str(s.menger_checks));
    for (std::size_t i = 0; i < s.mismatches.size() && i < 5; ++i) n.require(false, s.mismatches[i]);
    n.require(s.mismatches.empty(), str(s.mismatches.size()) + " mismatches");
    std::printf("       %zu comparisons, %zu with a witness\n", s.comparisons, s.witnesses);
  });

  criterion(9, "graph power distance law on 200 random graphs", 1 * kMinute, [](Notes& n) {
    std::mt19937_64 rng(77);
    std::size_t pairs = 0;
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
      const int size = 2 + static_cast<int>(rng() % 11);
      Graph g = random_sparse_graph(rng, size);
      for (int p : {2, 3}) {
        Graph gp = graph_power(g, p);
        for (Vertex u = 0; u < size; ++u) {
          auto d = plain_bfs(g, {u});
          auto dp = plain_bfs(gp, {u});
          for (Vertex v = 0; v < size; ++v) {
            if (v == u) continue;
            ++pairs;
            const int expect = d[v] == kFar ? kFar : (d[v] + p - 1) / p;
            bad += dp[v] != expect;
          }
        }
      }
    }
    n.require(bad == 0, str(bad) + " of " + str(pairs) + " pairs disagree");
    PowerLawSummary lib = run_power_law_corpus(78, 200, 12, {2, 3});
    n.require(lib.graphs == 200 && lib.mismatches.empty(), "library corpus mismatches");
  });

  criterion(10, "mutants are caught and reports are deterministic", 15 * kMinute, [](Notes& n) {
    BlockLayout layout;
    Block b = build_block(BlockParams::make(1, 2), layout);
    for (std::size_t i = 0; i < layout.spines.size(); ++i) {
      Block mutant = shorten_spine(b, layout.spines[i]);
      BlockVerification v = verify_block(mutant);
      std::string which;
      if (v.distances && v.distances->status == CheckStatus::kFail) which += " distances";
      if (v.blockers && status_of(*v.blockers) == CheckStatus::kFail) which += " blockers";
      if (v.far_pairs && status_of(*v.far_pairs) == CheckStatus::kFail) which += " far-pairs";
      n.require(v.status == CheckStatus::kFail, "spine " + std::to_string(i) + " mutant passes");
      std::printf("       spine %zu shortened: caught by%s\n", i, which.empty() ? " nothing" : which.c_str());
    }
    for (int m = 2; m <= 3; ++m) {
      for (Variant var : {Variant::kStandard, Variant::kDegree3}) {
        if (var == Variant::kDegree3 && m == 3) continue;  // its far search runs under criterion 7
        Block blk = build_block(BlockParams::make(1, m, var));
        const std::string tag = to_string(var) + "(1," + std::to_string(m) + ")";
        const std::string first = full_report(blk, 1);
        n.require(first == full_report(blk, 1), tag + " differs between runs");
        n.require(first == full_report(blk, 4), tag + " differs between 1 and 4 workers");
      }
    }
    Block big = build_block(BlockParams::make(1, 4));
    BlockerOptions sampled;
    sampled.mode = BlockerMode::kSampled;
    sampled.seed = 5;
    sampled.trials = 2000;
    const std::string a = format_document(to_document(verify_blockers(big, 3, sampled)));
    sampled.workers = 4;
    n.require(a == format_document(to_document(verify_blockers(big, 3, sampled))),
              "sampled (1,4) blockers differ between 1 and 4 workers");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
