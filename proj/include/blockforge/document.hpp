#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "blockforge/block.hpp"

namespace blockforge {

using Document = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Canonical text form: one object key per line in insertion order,
/// arrays of structured values one element per line, compact elements.
/// Byte-stable for equal documents.
std::string format_document(const Document& doc);

/// Canonical block document.
std::string serialize(const Block& b);

/// Inverse of serialize. Throws InputError on malformed JSON, missing
/// fields, non-canonical or asymmetric edge listings ([v, u] with v > u),
/// duplicate edges, dangling ids, or a root role anywhere but the root.
Block parse_block(std::string_view text);

/// Graphviz rendering: roles pick shapes and colours, S/T/root are
/// labelled, anchors and ports share one rank.
std::string export_dot(const Block& b);

}  // namespace blockforge
