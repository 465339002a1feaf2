#include "blockforge/graph.hpp"

#include <algorithm>
#include <array>

namespace blockforge {

namespace {

constexpr std::array<const char*, 8> kTagNames = {
    "root",          "tree_node", "anchor",       "spine_internal",
    "base_internal", "port",      "pendant_leaf", "fan_tree_internal",
};

}  // namespace

int VertexRole::arity() const {
  switch (tag) {
    case Tag::kRoot:
    case Tag::kPendantLeaf:
    case Tag::kFanTreeInternal:
      return 0;
    case Tag::kAnchor:
      return 1;
    default:
      return 2;
  }
}

std::string to_string(VertexRole::Tag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

VertexRole::Tag parse_role_tag(const std::string& name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (name == kTagNames[i]) return static_cast<VertexRole::Tag>(i);
  }
  throw InputError("unknown vertex role '" + name + "'");
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(std::vector<VertexRole> roles, std::span<const std::pair<Vertex, Vertex>> edges)
    : adjacency_(roles.size()), roles_(std::move(roles)) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("duplicate edge");
    }
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(vertex_count()) + ")");
  }
}

void Graph::check_set(const VertexSet& set) const {
  for (Vertex v : set) check_vertex(v);
}

bool is_valid_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.contains(path[i]) || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

}  // namespace blockforge
