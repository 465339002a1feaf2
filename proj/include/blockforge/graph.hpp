#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockforge {

using Vertex = std::int32_t;

/// Thrown for malformed arguments: ids out of range, bad parameters, empty
/// sets where a nonempty one is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The part a vertex plays in a block construction. Indices are 1-based
/// where they name a position along the base path (anchors, ports,
/// segments), 0-based for tree levels.
struct VertexRole {
  enum class Tag : std::uint8_t {
    kRoot,
    kTreeNode,        // a = depth, b = index within level
    kAnchor,          // a = position
    kSpineInternal,   // a = spine id, b = offset from the tree end
    kBaseInternal,    // a = segment, b = offset from the left end
    kPort,            // a = segment boundary, b = slot
    kPendantLeaf,
    kFanTreeInternal,
  };

  Tag tag = Tag::kRoot;
  int a = 0;
  int b = 0;

  static VertexRole root() { return {Tag::kRoot, 0, 0}; }
  static VertexRole tree_node(int depth, int index) { return {Tag::kTreeNode, depth, index}; }
  static VertexRole anchor(int position) { return {Tag::kAnchor, position, 0}; }
  static VertexRole spine_internal(int spine, int offset) { return {Tag::kSpineInternal, spine, offset}; }
  static VertexRole base_internal(int segment, int offset) { return {Tag::kBaseInternal, segment, offset}; }
  static VertexRole port(int boundary, int slot) { return {Tag::kPort, boundary, slot}; }
  static VertexRole pendant_leaf() { return {Tag::kPendantLeaf, 0, 0}; }
  static VertexRole fan_tree_internal() { return {Tag::kFanTreeInternal, 0, 0}; }

  /// Number of integer fields the tag carries (0, 1 or 2).
  int arity() const;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

std::string to_string(VertexRole::Tag tag);
VertexRole::Tag parse_role_tag(const std::string& name);

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  std::span<const Vertex> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Ordered vertex sequence. Validity against a graph is checked by
/// `is_valid_path`, not on construction.
using Path = std::vector<Vertex>;

/// Immutable simple undirected graph with dense ids and per-vertex roles.
/// Adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects self-loops, duplicate edges and ids
  /// outside [0, roles.size()).
  Graph(std::vector<VertexRole> roles, std::span<const std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  const VertexRole& role(Vertex v) const { return roles_[v]; }
  const std::vector<VertexRole>& roles() const { return roles_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }
  void check_vertex(Vertex v) const;
  void check_set(const VertexSet& set) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexRole> roles_;
  std::size_t edge_count_ = 0;
};

/// True when consecutive vertices are adjacent and no vertex repeats.
bool is_valid_path(const Graph& g, std::span<const Vertex> path);

}  // namespace blockforge
