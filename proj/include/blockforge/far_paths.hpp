#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockforge/distance.hpp"
#include "blockforge/graph.hpp"

namespace blockforge {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

/// k paths between S and T, pairwise at distance >= c, all avoiding
/// `forbidden`. Distances are measured in the whole graph, forbidden
/// vertices included.
struct FarPathQuery {
  VertexSet S;
  VertexSet T;
  int k = 2;
  int c = 3;
  VertexSet forbidden;
  std::uint64_t budget = kDefaultSearchBudget;  // node expansions

  void validate(const Graph& g) const;
};

struct FarPathWitness {
  std::vector<Path> paths;
  /// Smallest pairwise distance among the paths; nullopt when k == 1 or
  /// the paths lie in different components.
  Distance certified_min_pairwise_distance;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_residual = 0;  // remaining paths cannot fit outside the ball
  std::uint64_t prunes_dead_end = 0;  // partial induced path cannot reach T
  std::uint64_t prunes_corridor = 0;  // last path and completion must cross each other's balls

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    prunes_residual += o.prunes_residual;
    prunes_dead_end += o.prunes_dead_end;
    prunes_corridor += o.prunes_corridor;
    return *this;
  }
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

enum class SearchOutcome { kWitness, kExhaustedNoWitness, kBudgetExceeded };

std::string to_string(SearchOutcome o);

struct SearchCertificate {
  SearchOutcome outcome = SearchOutcome::kExhaustedNoWitness;
  std::optional<FarPathWitness> witness;
  SearchStats stats;
};

struct SearchOptions {
  int workers = 1;
};

/// Exact decision procedure. Enumerates induced first paths depth-first in
/// ascending neighbour order and recurses on the remaining k-1 paths in the
/// graph minus the ball of radius c-1 around the path. The result never
/// depends on `options.workers`.
SearchCertificate find_far_paths(const Graph& g, const FarPathQuery& query,
                                 const SearchOptions& options = {});

/// Smallest pairwise distance among `paths` in g (fresh BFS per path);
/// nullopt if fewer than two paths or all pairs are disconnected.
Distance min_pairwise_distance(const Graph& g, const std::vector<Path>& paths);

/// Independent re-check of a witness: k valid paths from S to T avoiding
/// the forbidden set with pairwise distance >= c. Returns the problems
/// found, empty when the witness holds.
std::vector<std::string> validate_witness(const Graph& g, const FarPathQuery& query,
                                          const FarPathWitness& witness);

}  // namespace blockforge
