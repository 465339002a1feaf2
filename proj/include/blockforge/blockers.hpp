#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockforge/block.hpp"

namespace blockforge {

/// S-T path in G - ball(X + {root}, ell), i.e. a path P with
/// dist(P, X + {root}) > ell. nullopt means X + {root} ell-covers every
/// S-T path.
std::optional<Path> escape_path(const Graph& g, std::optional<Vertex> root, const VertexSet& X, int ell,
                                const VertexSet& S, const VertexSet& T);

inline constexpr std::uint64_t kDefaultSubsetCap = 100'000'000;

enum class BlockerMode { kExhaustive, kSampled };
enum class BlockerVerdict { kAllEscaped, kCoveredBy, kRefused };

std::string to_string(BlockerMode m);
std::string to_string(BlockerVerdict v);

struct BlockerOptions {
  BlockerMode mode = BlockerMode::kExhaustive;
  std::uint64_t subset_cap = kDefaultSubsetCap;  // exhaustive only
  std::uint64_t seed = 1;                        // sampled only
  std::uint64_t trials = 10'000;                 // sampled only
  std::size_t battery_pool = 40;                 // sampled only
  std::uint64_t battery_limit = 20'000;          // sampled only
  bool record_witnesses = false;
  int workers = 1;
};

struct EscapeWitness {
  VertexSet X;
  Path path;
};

struct BlockerReport {
  int size_bound = 0;
  int ell = 1;
  BlockerMode mode = BlockerMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  BlockerVerdict verdict = BlockerVerdict::kAllEscaped;
  std::optional<VertexSet> covering;  // set when verdict == kCoveredBy
  std::uint64_t subsets_required = 0;  // exhaustive: sum of C(|V|, i), i <= size_bound
  std::uint64_t subsets_tested = 0;
  std::vector<EscapeWitness> witnesses;
};

/// Tests every X with |X| <= size_bound (exhaustive) or a seeded sample
/// plus a fixed adversarial battery (sampled): does an escape path from
/// X + {root} exist? Exhaustive mode refuses, rather than samples, when the
/// subset count exceeds the cap. The first covering X in test order is
/// reported.
BlockerReport verify_blockers(const Block& b, int size_bound, const BlockerOptions& options = {});

/// Sum over i <= k of C(n, i), saturating at UINT64_MAX.
std::uint64_t subsets_up_to(std::uint64_t n, int k);

}  // namespace blockforge
