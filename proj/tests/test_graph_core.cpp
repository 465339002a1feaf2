#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>
#include <string>

#include "blockforge/block.hpp"
#include "blockforge/distance.hpp"
#include "blockforge/document.hpp"
#include "blockforge/oracle.hpp"
#include "support.hpp"

using namespace blockforge;
using namespace testing_support;

TEST_CASE("graph rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), InputError);
  Graph g = make_graph(3, {{2, 0}, {1, 0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}});
}

TEST_CASE("vertex set stays sorted and unique") {
  VertexSet s({5, 1, 3, 1});
  CHECK(s.size() == 3);
  CHECK(s[0] == 1);
  CHECK(s.contains(3));
  CHECK(s.united(VertexSet{2}).size() == 4);
  CHECK(s.minus(VertexSet{1, 5}) == VertexSet{3});
}

TEST_CASE("ball on a path") {
  Graph g = path_graph(4);
  CHECK(ball(g, VertexSet{0}, 1) == VertexSet{0, 1});
  CHECK(ball(g, VertexSet{2}, 0) == VertexSet{2});
  CHECK(ball(g, VertexSet{}, 3).empty());
  CHECK_THROWS_AS(ball(g, VertexSet{7}, 1), InputError);
}

TEST_CASE("ball around the root of the (1,2)-block") {
  Block b = build_block(BlockParams::make(1, 2));
  VertexSet r = ball(b.graph, VertexSet{b.root}, 1);
  CHECK(r.size() == 3);
  for (Vertex v : r) {
    if (v != b.root) CHECK(b.graph.role(v).tag == VertexRole::Tag::kTreeNode);
  }
}

TEST_CASE("distance between sets") {
  Graph g = path_graph(4);
  CHECK(distance_between_sets(g, VertexSet{0}, VertexSet{3}) == 3);
  CHECK(distance_between_sets(g, VertexSet{1, 2}, VertexSet{2}) == 0);
  CHECK_THROWS_AS(distance_between_sets(g, VertexSet{}, VertexSet{1}), InputError);

  Block b = build_block(BlockParams::make(1, 1));
  CHECK_FALSE(distance_between_sets(b.graph, VertexSet{b.root}, b.S).has_value());
  CHECK(distance_between_sets(b.graph, b.S, b.T) == 3);
}

TEST_CASE("shortest path avoiding a set") {
  Graph g = path_graph(4);
  auto p = shortest_path_avoiding(g, VertexSet{0}, VertexSet{3}, {});
  REQUIRE(p.has_value());
  CHECK(*p == Path{0, 1, 2, 3});
  CHECK_FALSE(shortest_path_avoiding(g, VertexSet{0}, VertexSet{3}, VertexSet{1}).has_value());
  CHECK_FALSE(shortest_path_avoiding(g, VertexSet{0}, VertexSet{3}, VertexSet{0}).has_value());

  // ties go to the smaller ids: 0-1-3 and 0-2-3 both have length 2
  Graph square = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(*shortest_path_avoiding(square, VertexSet{0}, VertexSet{3}, {}) == Path{0, 1, 3});
}

TEST_CASE("(1,2)-block keeps an S-T route outside every single-vertex ball") {
  Block b = build_block(BlockParams::make(1, 2));
  for (Vertex x = 0; x < b.graph.vertex_count(); ++x) {
    VertexSet gone = ball(b.graph, VertexSet{b.root, x}, 1);
    auto p = shortest_path_avoiding(b.graph, b.S, b.T, gone);
    REQUIRE_MESSAGE(p.has_value(), "x = " << x);
    CHECK(is_valid_path(b.graph, *p));
    for (Vertex v : *p) CHECK_FALSE(gone.contains(v));
  }
}

TEST_CASE("random graphs: BFS symmetry and agreement with the test oracle") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_sparse_graph(rng, 4 + round % 12);
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(n);
    for (Vertex u = 0; u < n; ++u) {
      d[u] = bfs_distances(g, std::span<const Vertex>(&u, 1));
      auto ref = plain_bfs(g, {u});
      for (Vertex v = 0; v < n; ++v) CHECK(d[u][v] == (ref[v] == kFar ? kUnreached : ref[v]));
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) CHECK(d[u][v] == d[v][u]);
    }
  }
}

TEST_CASE("random graphs: ball is monotone in the radius and distributes over union") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_sparse_graph(rng, 5 + round % 10);
    const int n = g.vertex_count();
    VertexSet a{static_cast<Vertex>(rng() % n)};
    VertexSet b{static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n)};
    for (int r = 0; r < 4; ++r) {
      VertexSet small = ball(g, a, r);
      VertexSet big = ball(g, a, r + 1);
      CHECK(small.minus(big).empty());
      CHECK(ball(g, a.united(b), r) == ball(g, a, r).united(ball(g, b, r)));
    }
  }
}

TEST_CASE("graph power") {
  Graph g = path_graph(4);
  CHECK(graph_power(g, 1) == g);
  CHECK(graph_power(g, 3).adjacent(0, 3));
  CHECK_FALSE(graph_power(g, 2).adjacent(0, 3));
  CHECK_THROWS_AS(graph_power(g, 0), InputError);

  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    Graph h = random_sparse_graph(rng, 4 + round % 9);
    for (int p : {2, 3}) {
      Graph hp = graph_power(h, p);
      CHECK(hp.roles() == h.roles());
      for (Vertex u = 0; u < h.vertex_count(); ++u) {
        auto d = plain_bfs(h, {u});
        auto dp = plain_bfs(hp, {u});
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
          const int expect = d[v] == kFar ? kFar : (d[v] + p - 1) / p;
          CHECK(dp[v] == expect);
        }
      }
    }
  }
}

TEST_CASE("degree statistics") {
  DegreeStats s = degree_stats(path_graph(4));
  CHECK(s.histogram == std::map<int, std::size_t>{{1, 2}, {2, 2}});
  CHECK(s.max_degree == 2);
  CHECK(s.max_degree_vertices == VertexSet{1, 2});

  Block b = build_block(BlockParams::make(1, 2));
  CHECK(b.graph.degree(b.root) == 2);
  for (Vertex v = 0; v < b.graph.vertex_count(); ++v) {
    const auto& role = b.graph.role(v);
    // first tree level below the root
    if (role.tag == VertexRole::Tag::kTreeNode && role.a == 1) {
      CHECK(b.graph.degree(v) >= 3);
      CHECK(b.graph.degree(v) <= 4);
    }
  }
  CHECK(max_degree_excluding(build_block_degree3(BlockParams::make(1, 2)).graph, b.root) == 3);
}

TEST_CASE("serialization round trip and byte stability") {
  for (int m = 1; m <= 3; ++m) {
    Block b = build_block(BlockParams::make(1, m));
    const std::string text = serialize(b);
    CHECK(parse_block(text) == b);
    CHECK(serialize(parse_block(text)) == text);
    CHECK(serialize(build_block(BlockParams::make(1, m))) == text);
  }
  Block d3 = build_block_degree3(BlockParams::make(1, 2));
  CHECK(parse_block(serialize(d3)) == d3);
}

TEST_CASE("(1,1)-block document") {
  Block b = build_block(BlockParams::make(1, 1));
  Document doc = Document::parse(serialize(b));
  CHECK(doc["vertex_count"] == 5);
  CHECK(doc["edges"].size() == 3);
  for (const auto& e : doc["edges"]) {
    CHECK(e[0] != b.root);
    CHECK(e[1] != b.root);
  }
  for (const char* key : {"format_version", "ell", "m", "variant", "roles", "root", "S", "T"}) {
    CHECK(doc.contains(key));
  }
}

namespace {

std::string tampered(const std::function<void(Document&)>& edit) {
  Document doc = Document::parse(serialize(build_block(BlockParams::make(1, 2))));
  edit(doc);
  return doc.dump();
}

}  // namespace

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_block("{"), InputError);
  CHECK_THROWS_AS(parse_block("[]"), InputError);
  // listed as [v, u] with v > u
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) {
                    auto e = d["edges"][0];
                    d["edges"][0] = {e[1], e[0]};
                  })),
                  InputError);
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) { d["edges"].push_back(d["edges"].back()); })),
                  InputError);
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) { d["edges"].push_back({3, 999}); })), InputError);
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) { d["S"].push_back(999); })), InputError);
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) { d["roles"][5] = d["roles"][0]; })), InputError);
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) { d.erase("root"); })), InputError);
  CHECK_THROWS_AS(parse_block(tampered([](Document& d) { d["vertex_count"] = 44; })), InputError);
}

TEST_CASE("DOT export") {
  Block b = build_block(BlockParams::make(1, 1));
  const std::string dot = export_dot(b);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.back() == '\n');
  std::size_t nodes = 0;
  for (Vertex v = 0; v < 5; ++v) {
    if (dot.find("  v" + std::to_string(v) + " [") != std::string::npos) ++nodes;
  }
  CHECK(nodes == 5);
  CHECK(dot.find("label=\"r\", shape=doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"S\"") != std::string::npos);
  CHECK(dot.find("label=\"T\"") != std::string::npos);

  const std::string dot2 = export_dot(build_block(BlockParams::make(1, 2)));
  CHECK(dot2.find("rank=same") != std::string::npos);
  CHECK(export_dot(build_block(BlockParams::make(1, 2))) == dot2);
}
