#include "blockforge/report.hpp"

namespace blockforge {

Document to_document(const Distance& d) { return d ? Document(*d) : Document(nullptr); }

Document to_document(const Path& p) { return Document(std::vector<Vertex>(p.begin(), p.end())); }

Document to_document(const SearchStats& s) {
  Document doc;
  doc["nodes"] = s.nodes;
  doc["prunes"] = {{"residual", s.prunes_residual}, {"dead_end", s.prunes_dead_end}, {"corridor", s.prunes_corridor}};
  return doc;
}

Document to_document(const DistanceReport& r) {
  Document doc;
  doc["status"] = to_string(r.status);
  doc["required_within"] = 2 * r.ell + 1;
  doc["required_root_gap"] = 2 * r.ell;
  doc["min_within"] = to_document(r.min_within);
  doc["root_gap"] = to_document(r.root_gap);
  doc["order"] = r.order;
  Document rows = Document::array();
  for (const auto& row : r.matrix) {
    Document cells = Document::array();
    for (const auto& d : row) cells.push_back(to_document(d));
    rows.push_back(std::move(cells));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

Document to_document(const BlockerReport& r) {
  Document doc;
  doc["status"] = to_string(status_of(r));
  doc["verdict"] = to_string(r.verdict);
  doc["size_bound"] = r.size_bound;
  doc["ell"] = r.ell;
  doc["mode"] = to_string(r.mode);
  if (r.mode == BlockerMode::kSampled) {
    doc["seed"] = r.seed;
    doc["trials"] = r.trials;
  } else {
    doc["subsets_required"] = r.subsets_required;
  }
  doc["subsets_tested"] = r.subsets_tested;
  doc["covering"] = r.covering ? Document(std::vector<Vertex>(r.covering->begin(), r.covering->end()))
                               : Document(nullptr);
  Document witnesses = Document::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"X", std::vector<Vertex>(w.X.begin(), w.X.end())}, {"path", to_document(w.path)}});
  }
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

Document to_document(const FarPathQuery& q, const SearchCertificate& c) {
  Document doc;
  doc["query"] = {{"S", std::vector<Vertex>(q.S.begin(), q.S.end())},
                  {"T", std::vector<Vertex>(q.T.begin(), q.T.end())},
                  {"k", q.k},
                  {"c", q.c},
                  {"forbidden", std::vector<Vertex>(q.forbidden.begin(), q.forbidden.end())},
                  {"budget", q.budget}};
  doc["outcome"] = to_string(c.outcome);
  if (c.witness) {
    doc["certified_min_pairwise_distance"] = to_document(c.witness->certified_min_pairwise_distance);
    Document paths = Document::array();
    for (const auto& p : c.witness->paths) paths.push_back(to_document(p));
    doc["witness"] = std::move(paths);
  } else {
    doc["witness"] = nullptr;
  }
  doc["stats"] = to_document(c.stats);
  return doc;
}

Document block_summary(const Block& b) {
  Document doc;
  doc["ell"] = b.params.ell;
  doc["m"] = b.params.m;
  doc["variant"] = to_string(b.params.variant);
  doc["tree_depth"] = b.params.tree_depth;
  doc["vertex_count"] = b.graph.vertex_count();
  doc["edge_count"] = b.graph.edge_count();
  return doc;
}

Document verification_document(const Block& b, const BlockVerification& v, const std::string& check) {
  Document doc;
  doc["format_version"] = kFormatVersion;
  doc["report"] = "verify";
  doc["check"] = check;
  doc["status"] = to_string(v.status);
  doc["block"] = block_summary(b);
  if (v.distances) doc["distances"] = to_document(*v.distances);
  if (v.blockers) doc["blockers"] = to_document(*v.blockers);
  if (v.far_pairs) {
    Document far = to_document(*v.far_query, *v.far_pairs);
    Document with_status;
    with_status["status"] = to_string(status_of(*v.far_pairs));
    for (auto& [key, value] : far.items()) with_status[key] = value;
    doc["far_pairs"] = std::move(with_status);
  }
  return doc;
}

}  // namespace blockforge
