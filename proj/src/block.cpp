#include "blockforge/block.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace blockforge {

namespace {

class GraphBuilder {
 public:
  Vertex add(VertexRole role) {
    roles_.push_back(role);
    return static_cast<Vertex>(roles_.size() - 1);
  }

  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  /// Replaces edge a-b by a-w-b for a new vertex w.
  Vertex subdivide(Vertex a, Vertex b, VertexRole role) {
    auto it = std::find(edges_.begin(), edges_.end(), std::pair<Vertex, Vertex>(a, b));
    if (it == edges_.end()) throw std::logic_error("subdivide: no such edge");
    Vertex w = add(role);
    *it = {a, w};
    edge(w, b);
    return w;
  }

  /// Path of `length` edges from `from` to `to`; interior vertices are
  /// created in order starting next to `from` with offsets 1..length-1.
  Path path(Vertex from, Vertex to, int length, const std::function<VertexRole(int)>& role) {
    Path out{from};
    Vertex prev = from;
    for (int offset = 1; offset < length; ++offset) {
      Vertex v = add(role(offset));
      edge(prev, v);
      out.push_back(v);
      prev = v;
    }
    edge(prev, to);
    out.push_back(to);
    return out;
  }

  Vertex size() const { return static_cast<Vertex>(roles_.size()); }

  Graph finish() { return Graph(std::move(roles_), edges_); }

 private:
  std::vector<VertexRole> roles_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Scaffold J: root plus levels 1..tree_depth-2, heap-ordered.
std::vector<std::vector<Vertex>> add_scaffold(GraphBuilder& builder, const BlockParams& params) {
  std::vector<std::vector<Vertex>> levels;
  levels.push_back({builder.add(VertexRole::root())});
  for (int depth = 1; depth <= params.tree_depth - 2; ++depth) {
    std::vector<Vertex> level;
    const auto& parents = levels.back();
    for (int index = 0; index < (1 << depth); ++index) {
      Vertex v = builder.add(VertexRole::tree_node(depth, index));
      builder.edge(parents[index / 2], v);
      level.push_back(v);
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<std::vector<Vertex>> add_ports(GraphBuilder& builder, int n, int slots) {
  std::vector<std::vector<Vertex>> ports(n + 1);  // 1-based
  for (int i = 1; i <= n; ++i) {
    for (int slot = 1; slot <= slots; ++slot) {
      ports[i].push_back(builder.add(slots == 1 ? VertexRole::anchor(i) : VertexRole::port(i, slot)));
    }
  }
  return ports;
}

// Adds a copy of `sub` whose S and T (ascending id order) are identified
// with `left` and `right` and whose root is identified with `root`.
std::vector<Vertex> embed(GraphBuilder& builder, const Block& sub, Vertex root,
                          const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                          int segment) {
  std::vector<Vertex> map(sub.graph.vertex_count(), -1);
  map[sub.root] = root;
  for (std::size_t j = 0; j < sub.S.size(); ++j) map[sub.S[j]] = left[j];
  for (std::size_t j = 0; j < sub.T.size(); ++j) map[sub.T[j]] = right[j];
  for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) {
    if (map[v] != -1) continue;
    VertexRole role = sub.graph.role(v);
    if (sub.params.m == 1 && role.tag == VertexRole::Tag::kBaseInternal) role.a = segment;
    map[v] = builder.add(role);
  }
  for (auto [u, v] : sub.graph.edges()) builder.edge(map[u], map[v]);

  std::vector<Vertex> vertices(map.begin(), map.end());
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

Block base_block(const BlockParams& params, int segment) {
  const int len = params.spine_length();
  GraphBuilder builder;
  Vertex root = builder.add(VertexRole::root());
  Block b;
  b.params = params;
  b.params.m = 1;
  b.root = root;
  if (params.variant == Variant::kStandard) {
    Vertex s = builder.add(VertexRole::anchor(1));
    std::vector<Vertex> interior;
    for (int offset = 1; offset < len; ++offset) {
      interior.push_back(builder.add(VertexRole::base_internal(segment, offset)));
    }
    Vertex t = builder.add(VertexRole::anchor(2));
    Vertex prev = s;
    for (Vertex v : interior) {
      builder.edge(prev, v);
      prev = v;
    }
    builder.edge(prev, t);
    b.S = {s};
    b.T = {t};
  } else {
    // Path s'..t' of length 2l+1 with a pendant leaf on each end.
    std::vector<Vertex> line;
    for (int offset = 0; offset <= len; ++offset) {
      line.push_back(builder.add(VertexRole::base_internal(segment, offset)));
    }
    for (std::size_t i = 1; i < line.size(); ++i) builder.edge(line[i - 1], line[i]);
    Vertex s = builder.add(VertexRole::pendant_leaf());
    Vertex t = builder.add(VertexRole::pendant_leaf());
    builder.edge(line.front(), s);
    builder.edge(line.back(), t);
    b.S = {s};
    b.T = {t};
  }
  b.graph = builder.finish();
  return b;
}

// Planted tree from `u` to `leaves`: u has a single child, branch nodes
// split their leaf list in halves, every root-to-leaf path has `length`
// edges and branching happens as close to u as possible.
void add_fan(GraphBuilder& builder, Vertex u, const std::vector<Vertex>& leaves, int length,
             std::vector<Path>& spines) {
  auto fan_role = [](int) { return VertexRole::fan_tree_internal(); };

  std::function<void(Vertex, int, std::span<const Vertex>, Path)> branch =
      [&](Vertex node, int depth, std::span<const Vertex> group, Path prefix) {
        const std::size_t half = (group.size() + 1) / 2;
        for (auto part : {group.subspan(0, half), group.subspan(half)}) {
          if (part.size() == 1) {
            if (length - depth < 1) throw InputError("degree-3 fan does not fit in spine length");
            Path tail = builder.path(node, part[0], length - depth, fan_role);
            Path full = prefix;
            full.insert(full.end(), tail.begin() + 1, tail.end());
            spines.push_back(std::move(full));
          } else {
            if (depth + 1 >= length) throw InputError("degree-3 fan does not fit in spine length");
            Vertex child = builder.add(VertexRole::fan_tree_internal());
            builder.edge(node, child);
            Path next = prefix;
            next.push_back(child);
            branch(child, depth + 1, part, std::move(next));
          }
        }
      };

  if (leaves.size() == 1) {
    spines.push_back(builder.path(u, leaves[0], length, fan_role));
    return;
  }
  Vertex stem = builder.add(VertexRole::fan_tree_internal());
  builder.edge(u, stem);
  branch(stem, 1, leaves, Path{u, stem});
}

Block build_level(const BlockParams& params, int m, int segment, BlockLayout* layout) {
  if (m == 1) return base_block(params, segment);

  const Block sub = build_level(params, m - 1, 1, nullptr);
  const int n = params.anchor_count();
  const int len = params.spine_length();
  const bool degree3 = params.variant == Variant::kDegree3;

  GraphBuilder builder;
  auto levels = add_scaffold(builder, params);
  const Vertex root = levels[0][0];
  const auto& leaves = levels.back();
  auto ports = add_ports(builder, n, m - 1);

  std::vector<Path> spines;
  int spine_id = 1;
  for (int k = 1; k <= n / 2; ++k) {
    const Vertex u = leaves[k - 1];
    const auto [left, right] = anchor_attachment(k, n);
    if (!degree3) {
      for (int pos : {left, right}) {
        for (Vertex port : ports[pos]) {
          const int id = spine_id++;
          spines.push_back(
              builder.path(u, port, len, [id](int offset) { return VertexRole::spine_internal(id, offset); }));
        }
      }
    } else {
      add_fan(builder, u, ports[left], len, spines);
      add_fan(builder, u, ports[right], len, spines);
    }
  }

  // In the degree-3 variant s_0 and t_0 already have three neighbours, so
  // their pendants hang from a vertex inserted on the tree edge above them.
  Vertex s_anchor = leaves.front();
  Vertex t_anchor = leaves.back();
  if (degree3) {
    const auto& parents = levels[levels.size() - 2];
    s_anchor = builder.subdivide(parents.front(), leaves.front(), VertexRole::fan_tree_internal());
    t_anchor = builder.subdivide(parents.back(), leaves.back(), VertexRole::fan_tree_internal());
  }

  std::vector<std::vector<Vertex>> copies;
  for (int i = 1; i < n; ++i) {
    copies.push_back(embed(builder, sub, root, ports[i], ports[i + 1], i));
  }

  std::vector<Vertex> s_side = ports[1];
  s_side.push_back(s_anchor);
  std::vector<Vertex> t_side = ports[n];
  t_side.push_back(t_anchor);
  std::sort(s_side.begin(), s_side.end());
  std::sort(t_side.begin(), t_side.end());

  if (degree3) {
    for (auto* side : {&s_side, &t_side}) {
      for (Vertex& v : *side) {
        Vertex leaf = builder.add(VertexRole::pendant_leaf());
        builder.edge(v, leaf);
        v = leaf;
      }
    }
  }

  Block b;
  b.params = params;
  b.params.m = m;
  b.root = root;
  b.S = VertexSet(s_side);
  b.T = VertexSet(t_side);
  b.graph = builder.finish();

  if (layout != nullptr) {
    layout->tree_levels = std::move(levels);
    layout->ports.assign(ports.begin() + 1, ports.end());
    layout->spines = std::move(spines);
    layout->copies = std::move(copies);
  }
  return b;
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::kStandard ? "standard" : "degree3"; }

Variant parse_variant(const std::string& name) {
  if (name == "standard") return Variant::kStandard;
  if (name == "degree3") return Variant::kDegree3;
  throw InputError("unknown variant '" + name + "'");
}

BlockParams BlockParams::make(int ell, int m, Variant variant, int depth) {
  BlockParams p{ell, m, variant, depth == 0 ? 2 * ell + 2 : depth};
  p.validate();
  return p;
}

void BlockParams::validate() const {
  if (ell < 1) throw InputError("ell must be at least 1");
  if (m < 1) throw InputError("m must be at least 1");
  if (tree_depth < 2 * ell + 2) throw InputError("tree depth must be at least 2*ell+2");
  if (tree_depth > 24) throw InputError("tree depth too large");
}

void validate_block(const Block& b) {
  b.params.validate();
  const Graph& g = b.graph;
  g.check_vertex(b.root);
  g.check_set(b.S);
  g.check_set(b.T);
  const auto m = static_cast<std::size_t>(b.params.m);
  if (b.S.size() != m || b.T.size() != m) throw InputError("|S| and |T| must equal m");
  if (!b.S.intersected(b.T).empty()) throw InputError("S and T must be disjoint");
  if (b.S.contains(b.root) || b.T.contains(b.root)) throw InputError("root must not be in S or T");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool is_root_role = g.role(v).tag == VertexRole::Tag::kRoot;
    if (is_root_role != (v == b.root)) throw InputError("exactly the root vertex must carry role root");
  }
}

Block build_block(const BlockParams& params) {
  BlockLayout layout;
  return build_block(params, layout);
}

Block build_block(const BlockParams& params, BlockLayout& layout) {
  params.validate();
  layout = {};
  return build_level(params, params.m, 1, &layout);
}

Block build_block_degree3(BlockParams params) {
  params.variant = Variant::kDegree3;
  return build_block(params);
}

Block build_l2_explicit(int ell, int tree_depth) {
  const BlockParams params = BlockParams::make(ell, 2, Variant::kStandard, tree_depth);
  const int n = params.anchor_count();
  const int len = params.spine_length();

  GraphBuilder builder;
  auto levels = add_scaffold(builder, params);
  const auto& leaves = levels.back();

  std::vector<Vertex> anchors(n + 1, -1);
  for (int i = 1; i <= n; ++i) anchors[i] = builder.add(VertexRole::anchor(i));

  int spine_id = 1;
  for (int k = 1; k <= n / 2; ++k) {
    const auto [left, right] = anchor_attachment(k, n);
    for (int pos : {left, right}) {
      const int id = spine_id++;
      builder.path(leaves[k - 1], anchors[pos], len,
                   [id](int offset) { return VertexRole::spine_internal(id, offset); });
    }
  }
  for (int i = 1; i < n; ++i) {
    builder.path(anchors[i], anchors[i + 1], len,
                 [i](int offset) { return VertexRole::base_internal(i, offset); });
  }

  Block b;
  b.params = params;
  b.root = levels[0][0];
  b.S = {leaves.front(), anchors[1]};
  b.T = {leaves.back(), anchors[n]};
  b.graph = builder.finish();
  return b;
}

std::pair<int, int> anchor_attachment(int k, int n) {
  if (n < 4 || (n & (n - 1)) != 0) throw InputError("anchor count must be a power of two >= 4");
  if (k < 1 || k > n / 2) throw InputError("leaf index out of range");
  return {std::max(1, 2 * k - 2), std::min(n, 2 * k + 1)};
}

BlockSize block_size_formula(const BlockParams& params) {
  params.validate();
  if (params.variant != Variant::kStandard) throw InputError("size formula covers the standard variant only");
  const std::uint64_t len = params.spine_length();
  const std::uint64_t n = std::uint64_t{1} << (params.tree_depth - 1);
  const std::uint64_t tree = n - 1;

  BlockSize size{len + 2, len};  // path of length 2l+1 plus isolated root
  for (std::uint64_t m = 2; m <= static_cast<std::uint64_t>(params.m); ++m) {
    const std::uint64_t ports = n * (m - 1);
    BlockSize next;
    next.vertices = tree + ports * (len - 1) + ports + (n - 1) * (size.vertices - 2 * (m - 1) - 1);
    next.edges = (tree - 1) + ports * len + (n - 1) * size.edges;
    size = next;
  }
  return size;
}

CounterexampleInstance counterexample_from_block(const Block& b) {
  CounterexampleInstance ce;
  ce.graph = b.graph;
  ce.root = b.root;
  ce.S_prime = b.S.united({b.root});
  ce.T_prime = b.T.united({b.root});
  ce.ell = b.params.ell;
  ce.m_blocker = b.params.m - 1;
  return ce;
}

CounterexampleInstance assemble_counterexample(int ell, int m_blocker, Variant variant) {
  if (m_blocker < 1) throw InputError("m_blocker must be at least 1");
  return counterexample_from_block(build_block(BlockParams::make(ell, m_blocker + 1, variant)));
}

std::vector<std::string> audit_structure(const Block& b, const BlockLayout& layout) {
  std::vector<std::string> problems;
  auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };

  try {
    validate_block(b);
  } catch (const InputError& e) {
    fail(e.what());
  }
  const int m = b.params.m;
  if (m == 1) return problems;

  const int n = b.params.anchor_count();
  const int len = b.params.spine_length();
  const Graph& g = b.graph;

  if (layout.ports.size() != static_cast<std::size_t>(n)) fail("expected n port sets");
  for (std::size_t i = 0; i < layout.ports.size(); ++i) {
    if (layout.ports[i].size() != static_cast<std::size_t>(m - 1)) {
      fail("port set " + std::to_string(i + 1) + " does not have m-1 vertices");
    }
  }
  if (layout.copies.size() != static_cast<std::size_t>(n - 1)) fail("expected n-1 copies");
  for (std::size_t i = 1; i + 1 < layout.ports.size() && i < layout.copies.size(); ++i) {
    for (Vertex p : layout.ports[i]) {
      const auto& before = layout.copies[i - 1];
      const auto& after = layout.copies[i];
      if (!std::binary_search(before.begin(), before.end(), p) ||
          !std::binary_search(after.begin(), after.end(), p)) {
        fail("port set " + std::to_string(i + 1) + " not shared by adjacent copies");
      }
    }
  }
  for (const auto& copy : layout.copies) {
    if (!std::binary_search(copy.begin(), copy.end(), b.root)) fail("copy does not contain the root");
  }

  const auto& leaves = layout.tree_levels.back();
  if (layout.spines.size() != static_cast<std::size_t>(n * (m - 1))) fail("expected n(m-1) spines");
  for (const Path& spine : layout.spines) {
    if (!is_valid_path(g, spine)) {
      fail("spine is not a path");
      continue;
    }
    if (static_cast<int>(spine.size()) - 1 != len) fail("spine length differs from 2l+1");
    if (std::find(leaves.begin(), leaves.end(), spine.front()) == leaves.end()) {
      fail("spine does not start at a scaffold leaf");
    }
    if (b.params.variant == Variant::kStandard) {
      for (std::size_t i = 1; i + 1 < spine.size(); ++i) {
        if (g.degree(spine[i]) != 2) fail("spine interior vertex with degree other than 2");
      }
    }
  }
  return problems;
}

}  // namespace blockforge
