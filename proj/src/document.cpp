#include "blockforge/document.hpp"

#include <sstream>

namespace blockforge {

namespace {

bool is_structured(const Document& v) { return v.is_array() || v.is_object(); }

template <typename T>
T field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

Document role_to_json(const VertexRole& role) {
  Document out = Document::array({to_string(role.tag)});
  if (role.arity() >= 1) out.push_back(role.a);
  if (role.arity() >= 2) out.push_back(role.b);
  return out;
}

VertexRole role_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) throw InputError("malformed role entry");
  VertexRole role;
  role.tag = parse_role_tag(j[0].get<std::string>());
  if (j.size() != static_cast<std::size_t>(role.arity()) + 1) throw InputError("role has wrong arity");
  for (std::size_t i = 1; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw InputError("role field must be an integer");
  }
  if (role.arity() >= 1) role.a = j[1].get<int>();
  if (role.arity() >= 2) role.b = j[2].get<int>();
  return role;
}

}  // namespace

namespace {

void write_object(std::ostringstream& out, const Document& obj, const std::string& indent) {
  out << "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : obj.items()) {
    out << indent << "  " << Document(key).dump() << ": ";
    if (value.is_object() && !value.empty()) {
      write_object(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && is_structured(value.front())) {
      out << "[\n";
      for (std::size_t j = 0; j < value.size(); ++j) {
        out << indent << "    " << value[j].dump() << (j + 1 < value.size() ? ",\n" : "\n");
      }
      out << indent << "  ]";
    } else {
      out << value.dump();
    }
    out << (++i < obj.size() ? ",\n" : "\n");
  }
  out << indent << "}";
}

}  // namespace

std::string format_document(const Document& doc) {
  std::ostringstream out;
  write_object(out, doc, "");
  out << "\n";
  return out.str();
}

std::string serialize(const Block& b) {
  Document doc;
  doc["format_version"] = kFormatVersion;
  doc["ell"] = b.params.ell;
  doc["m"] = b.params.m;
  doc["variant"] = to_string(b.params.variant);
  doc["tree_depth"] = b.params.tree_depth;
  doc["vertex_count"] = b.graph.vertex_count();
  Document roles = Document::array();
  for (const auto& role : b.graph.roles()) roles.push_back(role_to_json(role));
  doc["roles"] = std::move(roles);
  Document edges = Document::array();
  for (auto [u, v] : b.graph.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["root"] = b.root;
  doc["S"] = std::vector<Vertex>(b.S.begin(), b.S.end());
  doc["T"] = std::vector<Vertex>(b.T.begin(), b.T.end());
  return format_document(doc);
}

Block parse_block(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("block document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("block document must be an object");
  if (field<int>(doc, "format_version") != kFormatVersion) throw InputError("unsupported format_version");

  Block b;
  b.params.ell = field<int>(doc, "ell");
  b.params.m = field<int>(doc, "m");
  b.params.variant = parse_variant(field<std::string>(doc, "variant"));
  b.params.tree_depth = field<int>(doc, "tree_depth");
  b.params.validate();

  const int n = field<int>(doc, "vertex_count");
  if (n < 0) throw InputError("vertex_count must be nonnegative");
  const auto& roles_json = doc.at("roles");
  if (!roles_json.is_array() || roles_json.size() != static_cast<std::size_t>(n)) {
    throw InputError("roles must list exactly vertex_count entries");
  }
  std::vector<VertexRole> roles;
  roles.reserve(n);
  for (const auto& r : roles_json) roles.push_back(role_from_json(r));

  if (!doc.contains("edges") || !doc.at("edges").is_array()) throw InputError("missing edges array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("edge entries must be [u, v] integer pairs");
    }
    const auto u = e[0].get<Vertex>();
    const auto v = e[1].get<Vertex>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge references a dangling vertex id");
    if (u == v) throw InputError("self-loop in edge list");
    if (u > v) throw InputError("asymmetric edge entry [" + std::to_string(u) + ", " + std::to_string(v) + "]");
    if (!edges.empty() && std::pair{u, v} <= edges.back()) {
      throw InputError("edges must be strictly sorted and unique");
    }
    edges.emplace_back(u, v);
  }
  b.graph = Graph(std::move(roles), edges);
  b.root = field<Vertex>(doc, "root");
  b.S = VertexSet(field<std::vector<Vertex>>(doc, "S"));
  b.T = VertexSet(field<std::vector<Vertex>>(doc, "T"));
  if (b.S.size() != doc.at("S").size() || b.T.size() != doc.at("T").size()) {
    throw InputError("S and T must not repeat vertices");
  }
  validate_block(b);
  return b;
}

std::string export_dot(const Block& b) {
  const Graph& g = b.graph;
  using Tag = VertexRole::Tag;
  auto faint = [&](Vertex v) {
    Tag t = g.role(v).tag;
    return t == Tag::kSpineInternal || t == Tag::kBaseInternal || t == Tag::kFanTreeInternal;
  };

  std::ostringstream out;
  out << "graph block {\n";
  out << "  label=\"(" << b.params.ell << "," << b.params.m << ")-block, " << to_string(b.params.variant)
      << "\";\n";
  out << "  node [fontsize=9];\n";
  std::vector<Vertex> ranked;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexRole& role = g.role(v);
    std::string label = std::to_string(v);
    std::string attrs;
    switch (role.tag) {
      case Tag::kRoot:
        label = "r";
        attrs = "shape=doublecircle, style=filled, fillcolor=red";
        break;
      case Tag::kTreeNode:
        attrs = "shape=circle, style=filled, fillcolor=lightblue";
        break;
      case Tag::kAnchor:
        attrs = "shape=box, style=filled, fillcolor=gold";
        ranked.push_back(v);
        break;
      case Tag::kPort:
        attrs = "shape=box, style=filled, fillcolor=orange";
        ranked.push_back(v);
        break;
      case Tag::kPendantLeaf:
        attrs = "shape=diamond";
        break;
      default:
        attrs = "shape=point";
        break;
    }
    if (b.S.contains(v)) {
      label = "S";
      attrs += ", color=darkgreen, penwidth=2";
    } else if (b.T.contains(v)) {
      label = "T";
      attrs += ", color=blue, penwidth=2";
    }
    if (faint(v) && !b.S.contains(v) && !b.T.contains(v)) {
      out << "  v" << v << " [" << attrs << "];\n";
    } else {
      out << "  v" << v << " [label=\"" << label << "\", " << attrs << "];\n";
    }
  }
  if (!ranked.empty()) {
    out << "  { rank=same;";
    for (Vertex v : ranked) out << " v" << v << ";";
    out << " }\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  v" << u << " -- v" << v;
    if (faint(u) || faint(v)) out << " [style=dotted]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace blockforge
