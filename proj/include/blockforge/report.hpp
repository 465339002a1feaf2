#pragma once

#include <string>

#include "blockforge/blockers.hpp"
#include "blockforge/document.hpp"
#include "blockforge/far_paths.hpp"
#include "blockforge/verify.hpp"

namespace blockforge {

// Report documents. Infinite distances are written as null. Wall-clock
// time is deliberately left out so that reruns are byte-identical.

Document to_document(const Distance& d);
Document to_document(const Path& p);
Document to_document(const SearchStats& s);
Document to_document(const DistanceReport& r);
Document to_document(const BlockerReport& r);
Document to_document(const FarPathQuery& q, const SearchCertificate& c);

/// Header fields shared by every report about a block.
Document block_summary(const Block& b);

/// `check` names the subcommand argument (distances, blockers, far-pairs, all).
Document verification_document(const Block& b, const BlockVerification& v, const std::string& check);

}  // namespace blockforge
