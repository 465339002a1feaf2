#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blockforge/far_paths.hpp"
#include "blockforge/graph.hpp"

namespace blockforge {

struct OracleInstance {
  Graph graph;
  VertexSet S;
  VertexSet T;
};

/// Sparse random graph on n vertices: a random forest plus a few extra
/// edges. All roles are tree_node(0, v), which carries no meaning here.
Graph random_sparse_graph(std::mt19937_64& rng, int n);

/// Random graph with 4..max_vertices vertices and small S, T that
/// sometimes overlap.
OracleInstance random_instance(std::mt19937_64& rng, int max_vertices);

/// Largest k such that k S-T paths with pairwise distance >= c exist,
/// found by asking the solver for k = 1, 2, ...
int max_feasible_k(const Graph& g, const VertexSet& S, const VertexSet& T, int c);

struct OracleSummary {
  std::size_t instances = 0;
  std::size_t comparisons = 0;  // (instance, k, c) triples
  std::size_t witnesses = 0;    // comparisons where a tuple exists
  std::size_t menger_checks = 0;
  std::vector<std::string> mismatches;
};

/// Solver vs brute force for k in {1, 2}, c in {1, 2, 3}, plus solver
/// witness re-validation and the Menger count against max_feasible_k at c = 1.
OracleSummary run_oracle_corpus(std::uint64_t seed, std::size_t count, int max_vertices = 14);

struct PowerLawSummary {
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  std::vector<std::string> mismatches;
};

/// dist in G^p against ceil(dist in G / p) over all ordered pairs.
PowerLawSummary run_power_law_corpus(std::uint64_t seed, std::size_t count, int max_vertices = 12,
                                     const std::vector<int>& powers = {2, 3});

}  // namespace blockforge
