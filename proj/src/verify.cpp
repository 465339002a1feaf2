#include "blockforge/verify.hpp"

namespace blockforge {

namespace {

bool at_least(const Distance& d, int bound) { return !d || *d >= bound; }

Distance min_of(const Distance& a, const Distance& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kUndecided:
      return "undecided";
  }
  return "unknown";
}

CheckStatus combine(CheckStatus a, CheckStatus b) {
  if (a == CheckStatus::kFail || b == CheckStatus::kFail) return CheckStatus::kFail;
  if (a == CheckStatus::kUndecided || b == CheckStatus::kUndecided) return CheckStatus::kUndecided;
  return CheckStatus::kPass;
}

DistanceReport verify_distances(const Block& b) {
  validate_block(b);
  DistanceReport r;
  r.ell = b.params.ell;
  r.order.push_back(b.root);
  r.order.insert(r.order.end(), b.S.begin(), b.S.end());
  r.order.insert(r.order.end(), b.T.begin(), b.T.end());

  const std::size_t size = r.order.size();
  r.matrix.assign(size, std::vector<Distance>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const Vertex source = r.order[i];
    auto dist = bfs_distances(b.graph, std::span<const Vertex>(&source, 1));
    for (std::size_t j = 0; j < size; ++j) {
      const int d = dist[r.order[j]];
      if (d != kUnreached) r.matrix[i][j] = d;
    }
  }

  bool first = true;
  for (std::size_t i = 1; i < size; ++i) {
    r.root_gap = i == 1 ? r.matrix[0][i] : min_of(r.root_gap, r.matrix[0][i]);
    for (std::size_t j = i + 1; j < size; ++j) {
      r.min_within = first ? r.matrix[i][j] : min_of(r.min_within, r.matrix[i][j]);
      first = false;
    }
  }
  const int ell = b.params.ell;
  const bool ok = at_least(r.min_within, 2 * ell + 1) && at_least(r.root_gap, 2 * ell);
  r.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

CheckStatus status_of(const BlockerReport& r) {
  switch (r.verdict) {
    case BlockerVerdict::kAllEscaped:
      return CheckStatus::kPass;
    case BlockerVerdict::kCoveredBy:
      return CheckStatus::kFail;
    case BlockerVerdict::kRefused:
      return CheckStatus::kUndecided;
  }
  return CheckStatus::kUndecided;
}

CheckStatus status_of(const SearchCertificate& c) {
  switch (c.outcome) {
    case SearchOutcome::kExhaustedNoWitness:
      return CheckStatus::kPass;
    case SearchOutcome::kWitness:
      return CheckStatus::kFail;
    case SearchOutcome::kBudgetExceeded:
      return CheckStatus::kUndecided;
  }
  return CheckStatus::kUndecided;
}

FarPathQuery far_pair_query(const Block& b, std::uint64_t budget) {
  FarPathQuery q;
  q.S = b.S;
  q.T = b.T;
  q.k = 2;
  q.c = 3;
  q.forbidden = VertexSet{b.root};
  q.budget = budget;
  return q;
}

BlockVerification verify_block(const Block& b, const VerifyOptions& options) {
  validate_block(b);
  BlockVerification v;
  if (options.distances) {
    v.distances = verify_distances(b);
    v.status = combine(v.status, v.distances->status);
  }
  if (options.blockers) {
    BlockerOptions bo = options.blocker_options;
    bo.workers = options.workers;
    v.blockers = verify_blockers(b, options.size_bound.value_or(b.params.m - 1), bo);
    v.status = combine(v.status, status_of(*v.blockers));
  }
  if (options.far_pairs) {
    v.far_query = far_pair_query(b, options.budget);
    v.far_pairs = find_far_paths(b.graph, *v.far_query, SearchOptions{options.workers});
    v.status = combine(v.status, status_of(*v.far_pairs));
  }
  return v;
}

}  // namespace blockforge
