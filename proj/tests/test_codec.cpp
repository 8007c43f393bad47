#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "forge/codec.hpp"
#include "forge/graph.hpp"
#include "forge/iso.hpp"

using namespace forge;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g;
  for (int i = 1; i <= n; ++i) g.insert_vertex(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) g.insert_edge(std::to_string(i), std::to_string(j));
  return g;
}

}  // namespace

TEST_CASE("graph6 pinned values") {
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(complete_graph(5)) == "D~{");
  Graph one = graph6_decode("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);
  CHECK(graph6_decode("A_") == complete_graph(2));
}

TEST_CASE("graph6 round trip on 500 random graphs") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> order(0, 24);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    Graph g = random_graph(order(rng), dens(rng), rng);
    Graph h = graph6_decode(graph6_encode(g));
    // labels normalize to "1".."n" in label order, which for numeric labels
    // is the identity
    CHECK(h == g);
  }
}

TEST_CASE("graph6 malformed inputs report positions") {
  CHECK_THROWS_AS(graph6_decode(""), Error);
  CHECK_THROWS_AS(graph6_decode("A"), Error);       // missing body byte
  CHECK_THROWS_AS(graph6_decode("A_x"), Error);     // trailing junk
  CHECK_THROWS_AS(graph6_decode("\x01"), Error);    // below printable range
  CHECK(graph6_encode(Graph{}) == "?");             // order 0 still encodes
  // order 63 overflows the short form
  Graph big;
  for (int i = 1; i <= 63; ++i) big.insert_vertex(std::to_string(i));
  CHECK_THROWS_AS(graph6_encode(big), Error);
}

TEST_CASE("dot export") {
  Graph k2 = complete_graph(2);
  std::string dot = dot_export(k2);
  CHECK(dot.find("1 -- 2") != std::string::npos);
  CHECK(dot.find("graph") != std::string::npos);
  // labels are preserved, so differently-labeled isomorphs export differently
  Graph k2b = Graph::from_edges({"x", "y"}, {{"x", "y"}});
  CHECK(dot_export(k2) != dot_export(k2b));
}

TEST_CASE("json export is sorted and deterministic") {
  Graph g = Graph::from_edges({"10", "2", "a"}, {{"2", "10"}, {"2", "a"}});
  std::string j = json_export(g);
  CHECK(j.find("\"2\"") < j.find("\"10\""));
  CHECK(j.find("\"10\"") < j.find("\"a\""));
  CHECK(json_export(g) == j);
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# comment\n1 2\n\n2 3\n4\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.has_vertex("4"));
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("1 2\n1 2\n"), Error);  // duplicate is an error
}

TEST_CASE("file round trip with extension dispatch") {
  std::string g6 = std::string(std::tmpnam(nullptr)) + ".g6";
  std::string el = std::string(std::tmpnam(nullptr)) + ".txt";
  Graph g = cycle_graph(5);
  write_file_atomic(g6, graph6_encode(g) + "\n");
  std::string eltext;
  for (const auto& [u, v] : g.edges()) eltext += u + " " + v + "\n";
  write_file_atomic(el, eltext);
  CHECK(load_graph_file(g6) == g);
  CHECK(load_graph_file(el) == g);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/path.g6"), Error);
  std::remove(g6.c_str());
  std::remove(el.c_str());
}
