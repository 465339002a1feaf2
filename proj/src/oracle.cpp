#include "blockforge/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "blockforge/brute_force.hpp"
#include "blockforge/distance.hpp"
#include "blockforge/menger.hpp"
#include "blockforge/rng.hpp"

namespace blockforge {

namespace {

VertexSet random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<Vertex> picked;
  while (static_cast<int>(picked.size()) < size) {
    auto v = static_cast<Vertex>(uniform_below(rng, n));
    if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
  }
  return VertexSet(std::move(picked));
}

std::string describe(std::size_t instance, int k, int c) {
  std::ostringstream out;
  out << "instance " << instance << " k=" << k << " c=" << c;
  return out.str();
}

}  // namespace

Graph random_sparse_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a == b) return;
    auto e = std::minmax(a, b);
    if (std::find(edges.begin(), edges.end(), std::pair<Vertex, Vertex>(e)) == edges.end()) edges.emplace_back(e);
  };
  for (Vertex v = 1; v < n; ++v) {
    if (uniform_below(rng, 100) < 85) add(v, static_cast<Vertex>(uniform_below(rng, v)));
  }
  const auto extra = uniform_below(rng, n / 2 + 2);
  for (std::uint64_t i = 0; i < extra; ++i) {
    add(static_cast<Vertex>(uniform_below(rng, n)), static_cast<Vertex>(uniform_below(rng, n)));
  }
  std::vector<VertexRole> roles;
  for (Vertex v = 0; v < n; ++v) roles.push_back(VertexRole::tree_node(0, v));
  return Graph(std::move(roles), edges);
}

OracleInstance random_instance(std::mt19937_64& rng, int max_vertices) {
  const int n = 4 + static_cast<int>(uniform_below(rng, max_vertices - 3));
  Graph g = random_sparse_graph(rng, n);
  VertexSet S = random_subset(rng, n, 1 + static_cast<int>(uniform_below(rng, 3)));
  VertexSet T = random_subset(rng, n, 1 + static_cast<int>(uniform_below(rng, 3)));
  if (uniform_below(rng, 4) == 0) T = T.united({S[0]});
  return {std::move(g), std::move(S), std::move(T)};
}

int max_feasible_k(const Graph& g, const VertexSet& S, const VertexSet& T, int c) {
  int k = 0;
  while (true) {
    FarPathQuery q;
    q.S = S;
    q.T = T;
    q.k = k + 1;
    q.c = c;
    if (find_far_paths(g, q).outcome != SearchOutcome::kWitness) return k;
    ++k;
  }
}

OracleSummary run_oracle_corpus(std::uint64_t seed, std::size_t count, int max_vertices) {
  std::mt19937_64 rng(seed);
  OracleSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    const OracleInstance inst = random_instance(rng, max_vertices);
    ++summary.instances;
    for (int k = 1; k <= 2; ++k) {
      for (int c = 1; c <= 3; ++c) {
        FarPathQuery q;
        q.S = inst.S;
        q.T = inst.T;
        q.k = k;
        q.c = c;
        const auto cert = find_far_paths(inst.graph, q);
        const auto brute = brute_force_far_tuples(inst.graph, inst.S, inst.T, k, c);
        ++summary.comparisons;
        const bool solver_found = cert.outcome == SearchOutcome::kWitness;
        if (cert.outcome == SearchOutcome::kBudgetExceeded) {
          summary.mismatches.push_back(describe(i, k, c) + ": budget exceeded");
        } else if (solver_found != brute.has_value()) {
          summary.mismatches.push_back(describe(i, k, c) + ": solver " + (solver_found ? "found" : "refuted") +
                                       ", brute force " + (brute ? "found" : "refuted"));
        }
        if (solver_found) {
          ++summary.witnesses;
          for (const auto& problem : validate_witness(inst.graph, q, *cert.witness)) {
            summary.mismatches.push_back(describe(i, k, c) + ": invalid witness: " + problem);
          }
        }
      }
    }
    ++summary.menger_checks;
    const int menger = menger_disjoint_paths(inst.graph, inst.S, inst.T).max_count;
    const int best = max_feasible_k(inst.graph, inst.S, inst.T, 1);
    if (menger != best) {
      summary.mismatches.push_back("instance " + std::to_string(i) + ": menger " + std::to_string(menger) +
                                   " vs max k " + std::to_string(best));
    }
  }
  return summary;
}

PowerLawSummary run_power_law_corpus(std::uint64_t seed, std::size_t count, int max_vertices,
                                     const std::vector<int>& powers) {
  std::mt19937_64 rng(seed);
  PowerLawSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, max_vertices - 1));
    const Graph g = random_sparse_graph(rng, n);
    ++summary.graphs;
    for (int p : powers) {
      const Graph gp = graph_power(g, p);
      for (Vertex u = 0; u < n; ++u) {
        const auto d = bfs_distances(g, std::span<const Vertex>(&u, 1));
        const auto dp = bfs_distances(gp, std::span<const Vertex>(&u, 1));
        for (Vertex v = 0; v < n; ++v) {
          ++summary.pairs;
          const int expected = d[v] == kUnreached ? kUnreached : (d[v] + p - 1) / p;
          if (dp[v] != expected) {
            summary.mismatches.push_back("graph " + std::to_string(i) + " p=" + std::to_string(p) + " pair " +
                                         std::to_string(u) + "," + std::to_string(v));
          }
        }
      }
    }
  }
  return summary;
}

}  // namespace blockforge
