#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "catalog.hpp"
#include "flatbox/graph.hpp"
#include "oracles.hpp"

using namespace flatbox;
namespace ts = flatbox::testsupport;

TEST_CASE("graph construction and edge bookkeeping") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(1, 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(2, 3));
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("complement is an involution and pairs up edge counts") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : ts::graph_catalog(n)) {
      Graph c = complement(g);
      CHECK(complement(c) == g);
      CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
    }
  }
  CHECK(complement(complete_graph(4)) == empty_graph(4));
}

TEST_CASE("non_edges lists exactly the complement's edges") {
  Graph g = make_cycle(5);
  auto ne = non_edges(g);
  CHECK(ne == complement(g).edges());
  CHECK(ne.size() == 5);
}

TEST_CASE("cycle and path builders") {
  Graph c5 = make_cycle(5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.has_edge(5, 1));
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);

  Graph p = make_path({3, 1, 4});
  CHECK(p.vertex_count() == 4);
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}});
  CHECK_THROWS_AS(make_path({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("induced subgraph relabels to 1..k preserving adjacency") {
  Graph g = make_cycle(6);
  auto sub = induced_subgraph(g, {2, 3, 5});
  CHECK(sub.labels == std::vector<int>{2, 3, 5});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(induced_subgraph(g, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("neighborhood closure lists every pair of neighbors") {
  Graph c5 = make_cycle(5);
  CHECK(neighborhood_closure(c5, 1) == std::vector<std::pair<int, int>>{{2, 5}});
  Graph k4 = complete_graph(4);
  CHECK(neighborhood_closure(k4, 1).size() == 3);
}

TEST_CASE("simplicial vertices") {
  Graph c5 = make_cycle(5);
  CHECK(!is_simplicial(c5, 1));
  Graph p3 = make_path({1, 2, 3});
  CHECK(is_simplicial(p3, 1));
  CHECK(!is_simplicial(p3, 2));
  CHECK(is_simplicial(complete_graph(3), 2));
  Graph lone(1);
  CHECK(is_simplicial(lone, 1));
}

TEST_CASE("outer path spans the vertices at cycle distance two or more") {
  auto outer = outer_path(11, 1);
  CHECK(outer.labels == std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(outer.graph.edge_count() == 7);
  auto shifted = outer_path(7, 2);
  CHECK(shifted.labels == std::vector<int>{4, 5, 6, 7});
  auto wrapped = outer_path(7, 6);
  CHECK(wrapped.labels == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(outer_path(4, 1), std::invalid_argument);
}

TEST_CASE("chromatic number matches the naive oracle on every graph up to n=6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : ts::graph_catalog(n)) {
      Coloring col = chromatic_number(g);
      CHECK(col.chi == ts::oracle_chromatic(g));
      CHECK(valid_coloring(g, col.color, col.chi));
    }
  }
}

TEST_CASE("chromatic number on known graphs") {
  CHECK(chromatic_number(make_cycle(5)).chi == 3);
  CHECK(chromatic_number(make_cycle(6)).chi == 2);
  CHECK(chromatic_number(complete_graph(4)).chi == 4);
  CHECK(chromatic_number(empty_graph(3)).chi == 1);
  CHECK(chromatic_number(Graph(0)).chi == 0);
}

TEST_CASE("bipartite and odd cycle predicates") {
  CHECK(is_bipartite(make_cycle(6)));
  CHECK(!is_bipartite(make_cycle(7)));
  CHECK(is_odd_cycle(make_cycle(9)));
  CHECK(!is_odd_cycle(make_cycle(8)));
  CHECK(!is_odd_cycle(complete_graph(4)));
  CHECK(is_odd_cycle(complete_graph(3)));
  Graph two_triangles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(!is_odd_cycle(two_triangles));  // 2-regular but disconnected
}

TEST_CASE("3-critical graphs") {
  CHECK(is_3_critical(make_cycle(5)));
  CHECK(is_3_critical(make_cycle(7)));
  CHECK(!is_3_critical(make_cycle(6)));
  CHECK(!is_3_critical(complete_graph(4)));
  // odd cycle plus an extra vertex: deleting that vertex keeps chi = 3
  Graph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}});
  CHECK(!is_3_critical(g));
}

TEST_CASE("catalog sizes match the known counts of non-isomorphic graphs") {
  const int expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<int>(ts::graph_catalog(n).size()) == expected[n]);
}
