#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "forge/graph.hpp"
#include "forge/iso.hpp"

using namespace forge;

namespace {

// Random relabeling of g onto fresh labels "r<i>".
Graph shuffle_labels(const Graph& g, std::mt19937& rng) {
  auto vs = g.vertices();
  std::vector<int> perm(vs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<Label, Label, NaturalLess> m;
  for (size_t i = 0; i < vs.size(); ++i) m[vs[i]] = "r" + std::to_string(perm[i]);
  Graph h;
  for (const auto& v : vs) h.insert_vertex(m[v]);
  for (const auto& [u, v] : g.edges()) h.insert_edge(m[u], m[v]);
  return h;
}

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

TEST_CASE("canonical code is a label invariant") {
  std::mt19937 rng(20240817);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(3 + t % 9, 0.4, rng);
    Graph h = shuffle_labels(g, rng);
    CHECK(canonical_code(g) == canonical_code(h));
  }
}

TEST_CASE("canonical code separates non-isomorphic graphs") {
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(path_graph(6)));
  // same degree sequence, different graphs: C6 vs 2xC3
  Graph two_triangles = Graph::from_edges(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"4", "5"}, {"5", "6"}, {"4", "6"}});
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(two_triangles));
}

TEST_CASE("find_isomorphism recovers a shuffled labeling") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(4 + t % 8, 0.5, rng);
    Graph h = shuffle_labels(g, rng);
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(check_isomorphism(g, h, *iso));
  }
}

TEST_CASE("find_isomorphism rejects near misses") {
  Graph c6 = cycle_graph(6);
  CHECK_FALSE(find_isomorphism(c6, path_graph(6)).has_value());
  CHECK_FALSE(are_isomorphic(complete_graph(4), cycle_graph(4)));
  CHECK(are_isomorphic(complete_bipartite(2, 2), cycle_graph(4)));
}

TEST_CASE("check_isomorphism is an independent gate") {
  Graph g = cycle_graph(4);
  Isomorphism bad{{"1", "1"}, {"2", "3"}, {"3", "2"}, {"4", "4"}};  // swaps a non-edge onto an edge
  CHECK_FALSE(check_isomorphism(g, g, bad));
  Isomorphism partial{{"1", "1"}, {"2", "2"}};
  CHECK_FALSE(check_isomorphism(g, g, partial));
  Isomorphism rot{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}};
  CHECK(check_isomorphism(g, g, rot));
}

TEST_CASE("regular pairs needing individualization") {
  // K3,3 vs the triangular prism: both cubic on 6 vertices
  Graph prism = Graph::from_edges({"1", "2", "3", "4", "5", "6"},
                                  {{"1", "2"}, {"2", "3"}, {"1", "3"},
                                   {"4", "5"}, {"5", "6"}, {"4", "6"},
                                   {"1", "4"}, {"2", "5"}, {"3", "6"}});
  CHECK_FALSE(are_isomorphic(complete_bipartite(3, 3), prism));
  std::mt19937 rng(99);
  CHECK(are_isomorphic(prism, shuffle_labels(prism, rng)));
}
