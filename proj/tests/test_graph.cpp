#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/graph.hpp"

using namespace forge;

TEST_CASE("natural label order") {
  CHECK(natural_less("2", "9"));
  CHECK(natural_less("9", "10"));
  CHECK(natural_less("10", "a"));
  CHECK(natural_less("a", "a'"));
  CHECK_FALSE(natural_less("10", "9"));
  CHECK_FALSE(natural_less("a", "a"));
}

TEST_CASE("edge normalization") {
  CHECK(make_edge("7", "3") == Edge{"3", "7"});
  CHECK_THROWS_AS(make_edge("x", "x"), Error);
}

TEST_CASE("simple-graph invariants enforced") {
  Graph g;
  g.insert_vertex("1");
  g.insert_vertex("2");
  g.insert_edge("1", "2");
  CHECK_THROWS_AS(g.insert_edge("1", "2"), Error);       // duplicates are bugs, not no-ops
  CHECK_THROWS_AS(g.insert_edge("2", "1"), Error);
  CHECK_THROWS_AS(g.insert_edge("1", "1"), Error);       // loop
  CHECK_THROWS_AS(g.insert_edge("1", "3"), Error);       // unknown endpoint
  CHECK_THROWS_AS(g.insert_vertex("1"), Error);
  CHECK_THROWS_AS(g.erase_edge("1", "3"), Error);
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
}

TEST_CASE("erase_vertex drops incident edges") {
  Graph g = complete_graph(4);
  g.erase_vertex("2");
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK_FALSE(g.has_vertex("2"));
}

TEST_CASE("pure ops do not mutate the input") {
  Graph g = cycle_graph(5);
  Graph h = add_edge(g, "1", "3");
  CHECK(g.size() == 5);
  CHECK(h.size() == 6);
  Graph d = delete_vertex(g, "5");
  CHECK(g.order() == 5);
  CHECK(d.order() == 4);
  CHECK(d.size() == 3);
  Graph e = delete_edge(g, "1", "2");
  CHECK(e.size() == 4);
  CHECK_THROWS_AS(delete_edge(g, "1", "3"), Error);  // NotAnEdge
}

TEST_CASE("contraction keeps the order-smaller label and stays simple") {
  // triangle with a pendant: contracting 1-2 must merge parallel edges
  Graph g = Graph::from_edges({"1", "2", "3", "4"},
                              {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"3", "4"}});
  Graph c = contract_edge(g, "2", "1");
  CHECK(c.has_vertex("1"));
  CHECK_FALSE(c.has_vertex("2"));
  CHECK(c.order() == 3);
  CHECK(c.size() == 2);  // 1-3 (merged), 3-4
  CHECK_THROWS_AS(contract_edge(g, "1", "4"), Error);
}

TEST_CASE("induced subgraph and spanning-subgraph predicate") {
  Graph g = complete_bipartite(2, 3);
  Graph s = induced_subgraph(g, LabelSet{"1", "3", "4"});
  CHECK(s.order() == 3);
  CHECK(s.size() == 2);
  Graph t = delete_edge(g, "1", "3");
  CHECK(is_spanning_edge_subgraph(t, g));
  CHECK_FALSE(is_spanning_edge_subgraph(g, t));
  CHECK_FALSE(is_spanning_edge_subgraph(s, g));  // not spanning
}

TEST_CASE("connectivity predicate") {
  CHECK(is_connected(Graph{}));
  CHECK(is_connected(cycle_graph(6)));
  Graph two = Graph::from_edges({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}});
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("builders") {
  CHECK(complete_graph(5).size() == 10);
  CHECK(cycle_graph(4).size() == 4);
  CHECK(path_graph(4).size() == 3);
  Graph b = complete_bipartite(3, 3);
  CHECK(b.size() == 9);
  CHECK(b.degree("1") == 3);
}

TEST_CASE("deterministic iteration order") {
  Graph g = Graph::from_edges({"10", "2", "b", "a"}, {{"10", "2"}, {"a", "b"}});
  CHECK(g.vertices() == std::vector<Label>{"2", "10", "a", "b"});
  auto es = g.edges();
  CHECK(es.front() == Edge{"2", "10"});
}

TEST_CASE("index view round trip") {
  Graph g = cycle_graph(5);
  IndexedGraph ig = index_graph(g);
  CHECK(ig.n == 5);
  CHECK(ig.labels[0] == "1");
  CHECK(ig.adj[0].size() == 2);
  CHECK(ig.mask.size() == 5);
  // mask agrees with adjacency lists
  for (int v = 0; v < ig.n; ++v)
    for (int w : ig.adj[v]) CHECK((ig.mask[v] >> w & 1) == 1);
}
