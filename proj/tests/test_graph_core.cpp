#include <doctest.h>

#include "steiner/flow.hpp"
#include "steiner/graph.hpp"
#include "support/fixtures.hpp"

using namespace steiner;

TEST_CASE("cut values") {
  CHECK(cut_value(fixtures::path(), CutSide{0}) == 1);
  CHECK(cut_value(fixtures::path(), CutSide{}) == 0);
  CHECK(cut_value(fixtures::path(), CutSide{0, 1, 2}) == 0);
  CHECK(cut_value(fixtures::cyc4(), CutSide{0, 1}) == 2);
  Graph par(2, {{0, 1, 2}, {0, 1, 3}}, {0, 1});
  CHECK(cut_value(par, CutSide{0}) == 5);
}

TEST_CASE("projection and Steiner cuts") {
  Graph p = fixtures::path();
  CHECK(projection(p, CutSide{0, 1}) == VertexSet{0});
  CHECK(projection(p, CutSide{}).empty());
  CHECK(projection(fixtures::expo(5), CutSide{0, 1, 2}) == VertexSet{0});
  CHECK_FALSE(is_steiner_cut(p, CutSide{1}));
  CHECK(is_steiner_cut(p, CutSide{0}));
  CHECK_FALSE(is_steiner_cut(p, CutSide{0, 2}));
}

TEST_CASE("contraction") {
  auto c = contract(fixtures::path(), VertexSet{0, 1});
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.graph.total_weight() == 1);
  CHECK(cut_value(c.graph, CutSide{c.mapping[0]}) == 1);

  auto id = contract(fixtures::cyc4(), VertexSet{2});
  CHECK(id.graph.vertex_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(id.mapping[v] == v);

  auto tri = contract(fixtures::cyc4(), VertexSet{0, 1});
  CHECK(tri.graph.vertex_count() == 3);
  int m = tri.mapping[0];
  CHECK(tri.mapping[1] == m);
  CHECK(cut_value(tri.graph, CutSide{m}) == 2);
  CHECK(cut_value(tri.graph, CutSide{tri.mapping[2]}) == 2);
  CHECK(tri.graph.total_weight() == 3);
  CHECK(preimage(tri.mapping, VertexSet{m}) == VertexSet{0, 1});
}

TEST_CASE("adding edges") {
  EdgeAdditions f;
  f.add(0, 2, 2);
  CHECK(cut_value(add_edges(fixtures::path(), f), CutSide{0}) == 3);
  CHECK(add_edges(fixtures::path(), {}).edges() == fixtures::path().edges());
  EdgeAdditions diag;
  diag.add(0, 2, 1), diag.add(1, 3, 1);
  Graph g = add_edges(fixtures::cyc4(), diag);
  for (int v = 0; v < 4; ++v) CHECK(cut_value(g, CutSide{v}) == 3);
}

TEST_CASE("edge additions canonical form") {
  EdgeAdditions f;
  f.add(3, 1, 1), f.add(1, 3, 2), f.add(0, 2, 1), f.add(4, 5, 0);
  auto c = f.canonical();
  REQUIRE(c.entries().size() == 2);
  CHECK(c.entries()[0] == EdgeAdditions::Entry{0, 2, 1});
  CHECK(c.entries()[1] == EdgeAdditions::Entry{1, 3, 3});
  CHECK(f.total_weight() == 4);
  CHECK(f.degrees(4) == std::vector<Weight>{1, 3, 1, 3});
  CHECK_THROWS_AS(f.add(1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(f.add(1, 2, -1), InvalidInput);
}

TEST_CASE("graph validation") {
  using E = Graph::Edge;
  CHECK_THROWS_AS(Graph(2, {E{0, 0, 1}}, {0}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {E{0, 1, 0}}, {0}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {E{0, 2, 1}}, {0}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {E{0, 1, 1}}, {5}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {E{0, 1, 1}}, {}), InvalidInput);
  CHECK_THROWS_AS(Graph(0, {}, {0}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {E{0, 1, kMaxTotalWeight}, E{0, 1, 1}}, {0}), InvalidInput);
}

TEST_CASE("Steiner connectivity of fixtures") {
  CHECK(steiner_connectivity(fixtures::path()) == 1);
  CHECK(steiner_connectivity(fixtures::cyc4()) == 2);
  CHECK(steiner_connectivity(fixtures::expo(5)) == 3);
}

TEST_CASE("submodularity on sampled pairs") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    Graph g = fixtures::random_graph(rng);
    const int n = g.vertex_count();
    for (int k = 0; k < 20; ++k) {
      CutSide x, y;
      for (int v = 0; v < n; ++v) {
        if (rng() & 1) x.push_back(v);
        if (rng() & 1) y.push_back(v);
      }
      CHECK(cut_value(g, set_intersection(x, y)) + cut_value(g, set_union(x, y)) <=
            cut_value(g, x) + cut_value(g, y));
      CHECK(cut_value(g, x) == cut_value(g, complement(n, x)));
    }
  }
}
