#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockforge/graph.hpp"

namespace blockforge {

enum class Variant : std::uint8_t { kStandard, kDegree3 };

std::string to_string(Variant v);
Variant parse_variant(const std::string& name);

struct BlockParams {
  int ell = 1;
  int m = 1;
  Variant variant = Variant::kStandard;
  /// Vertex levels of the scaffold tree including the anchor level.
  /// Must be at least 2 * ell + 2.
  int tree_depth = 4;

  /// Params with tree_depth at its minimum 2 * ell + 2 when `depth` is 0.
  static BlockParams make(int ell, int m, Variant variant = Variant::kStandard, int depth = 0);

  /// Throws InputError unless ell >= 1, m >= 1, tree_depth >= 2 * ell + 2.
  void validate() const;

  /// n = 2^(tree_depth - 1), the number of anchor positions per level.
  int anchor_count() const { return 1 << (tree_depth - 1); }
  /// Length of every spine and base segment.
  int spine_length() const { return 2 * ell + 1; }

  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

/// (G, root, S, T) together with the parameters it was built from.
struct Block {
  Graph graph;
  Vertex root = 0;
  VertexSet S;
  VertexSet T;
  BlockParams params;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Checks |S| = |T| = m, pairwise disjointness of S, T, {root}, a unique
/// root role on the root vertex, and id ranges. Throws InputError.
void validate_block(const Block& b);

/// Top-level construction record, kept for structural audits and mutation
/// tests. Copies of the smaller block are not described recursively.
struct BlockLayout {
  std::vector<std::vector<Vertex>> tree_levels;  // scaffold J, level 0 = root
  std::vector<std::vector<Vertex>> ports;        // V_1..V_n
  std::vector<Path> spines;                      // tree leaf ... port, in creation order
  std::vector<std::vector<Vertex>> copies;       // vertex set of H_1..H_{n-1}, sorted
};

Block build_block(const BlockParams& params);
Block build_block(const BlockParams& params, BlockLayout& layout);

/// build_block with the variant forced to degree3.
Block build_block_degree3(BlockParams params);

/// Direct construction of the (ell, 2)-block from the scaffold picture:
/// tree, leaf-to-anchor spines and the subdivided base path. Produces the
/// same ids as build_block(ell, 2).
Block build_l2_explicit(int ell, int tree_depth = 0);

/// Anchor positions wired to scaffold leaf k (1-based) when there are n
/// anchors: (max(1, 2k - 2), min(n, 2k + 1)).
std::pair<int, int> anchor_attachment(int k, int n);

struct BlockSize {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  friend bool operator==(const BlockSize&, const BlockSize&) = default;
};

/// Closed-form vertex and edge counts of the standard variant.
BlockSize block_size_formula(const BlockParams& params);

/// Instance with S' = S + {root}, T' = T + {root} over the block with
/// m = m_blocker + 1.
struct CounterexampleInstance {
  Graph graph;
  Vertex root = 0;
  VertexSet S_prime;
  VertexSet T_prime;
  int ell = 1;
  int m_blocker = 1;
};

CounterexampleInstance assemble_counterexample(int ell, int m_blocker,
                                               Variant variant = Variant::kStandard);
CounterexampleInstance counterexample_from_block(const Block& b);

/// Problems found by a structural audit; empty when the block is sound.
std::vector<std::string> audit_structure(const Block& b, const BlockLayout& layout);

}  // namespace blockforge
