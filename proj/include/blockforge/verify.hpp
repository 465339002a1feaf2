#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockforge/block.hpp"
#include "blockforge/blockers.hpp"
#include "blockforge/distance.hpp"
#include "blockforge/far_paths.hpp"

namespace blockforge {

enum class CheckStatus { kPass, kFail, kUndecided };

std::string to_string(CheckStatus s);

/// Any fail wins, then any undecided.
CheckStatus combine(CheckStatus a, CheckStatus b);

struct DistanceReport {
  int ell = 1;
  Distance min_within;  // smallest distance between distinct members of S + T
  Distance root_gap;    // dist(root, S + T)
  std::vector<Vertex> order;                  // root, then S, then T
  std::vector<std::vector<Distance>> matrix;  // over `order`
  CheckStatus status = CheckStatus::kPass;
};

/// Passes iff min_within >= 2*ell + 1 and root_gap >= 2*ell, where an
/// unreachable pair counts as infinitely far.
DistanceReport verify_distances(const Block& b);

CheckStatus status_of(const BlockerReport& r);
CheckStatus status_of(const SearchCertificate& c);

struct VerifyOptions {
  bool distances = true;
  bool blockers = true;
  bool far_pairs = true;
  std::optional<int> size_bound;  // default m - 1
  BlockerOptions blocker_options;
  std::uint64_t budget = kDefaultSearchBudget;
  int workers = 1;
};

struct BlockVerification {
  std::optional<DistanceReport> distances;
  std::optional<BlockerReport> blockers;
  std::optional<FarPathQuery> far_query;
  std::optional<SearchCertificate> far_pairs;
  CheckStatus status = CheckStatus::kPass;
};

/// The far-pair query of a block: k = 2, c = 3, paths must avoid the root.
FarPathQuery far_pair_query(const Block& b, std::uint64_t budget = kDefaultSearchBudget);

/// Runs the selected checks. A refusal or exhausted budget makes the
/// overall status undecided, never pass.
BlockVerification verify_block(const Block& b, const VerifyOptions& options = {});

}  // namespace blockforge
