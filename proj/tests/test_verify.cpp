#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "forge/family.hpp"
#include "forge/graph.hpp"
#include "forge/minor.hpp"
#include "forge/verify.hpp"

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

// Exhaustive oracle: min vertex cut size by trying every subset up to k-1,
// treating disconnected inputs as connectivity 0 and K_n as n-1.
bool connectivity_at_least_brute(const Graph& g, int k) {
  int n = g.order();
  if (n <= k) return false;  // convention of the Menger checker: need k+1 vertices
  if (!is_connected(g)) return false;
  auto vs = g.vertices();
  std::vector<int> idx(k - 1);
  // all subsets of size <= k-1
  for (int s = 1; s < k; ++s) {
    std::vector<int> c(s);
    for (int i = 0; i < s; ++i) c[i] = i;
    while (true) {
      Graph h = g;
      for (int i : c) h.erase_vertex(vs[i]);
      if (!is_connected(h)) return false;
      int i = s - 1;
      while (i >= 0 && c[i] == n - s + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("triangle finder") {
  CHECK(is_triangle_free(complete_bipartite(4, 4)));
  CHECK(is_triangle_free(cycle_graph(5)));
  CHECK_FALSE(is_triangle_free(complete_graph(3)));
  auto t = find_triangle(complete_graph(5));
  REQUIRE(t.has_value());
  Graph k5 = complete_graph(5);
  CHECK(k5.has_edge((*t)[0], (*t)[1]));
  CHECK(k5.has_edge((*t)[1], (*t)[2]));
  CHECK(k5.has_edge((*t)[0], (*t)[2]));
}

TEST_CASE("girth") {
  CHECK(girth(path_graph(5)) == kInfiniteGirth);
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(complete_bipartite(3, 3)) == 4);
  CHECK(girth(seed_t10()) == 4);
}

TEST_CASE("connectivity agrees with exhaustive cuts on graphs <= 12 vertices") {
  std::mt19937 rng(31337);
  std::vector<Graph> corpus;
  for (int t = 0; t < 80; ++t) corpus.push_back(random_graph(5 + t % 8, 0.25 + 0.08 * (t % 7), rng));
  corpus.push_back(complete_graph(6));
  corpus.push_back(cycle_graph(12));
  corpus.push_back(complete_bipartite(4, 4));
  corpus.push_back(seed_t10());
  corpus.push_back(path_graph(8));
  for (const auto& g : corpus)
    for (int k = 1; k <= 4; ++k) {
      auto res = vertex_connectivity_at_least(g, k);
      CHECK(res.ok == connectivity_at_least_brute(g, k));
      if (!res.ok && g.order() > k) {
        REQUIRE(res.witness.has_value());
        CHECK(cut_witness_disconnects(g, *res.witness));
        CHECK(static_cast<int>(res.witness->separator.size()) < k);
      }
    }
}

TEST_CASE("cut witness re-verification rejects fakes") {
  Graph g = cycle_graph(6);
  CutWitness w;
  w.separator = LabelSet{"2"};
  w.s = "1";
  w.t = "3";
  CHECK_FALSE(cut_witness_disconnects(g, w));  // one deletion cannot cut a cycle
  w.separator = LabelSet{"2", "6"};
  CHECK(cut_witness_disconnects(g, w));
}

TEST_CASE("planarity agrees with the Wagner-theorem oracle on small graphs") {
  // planar iff no K5 and no K3,3 minor; the minor engine is exact
  std::mt19937 rng(2718);
  Graph k5 = complete_graph(5);
  Graph k33 = complete_bipartite(3, 3);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(5 + t % 5, 0.35 + 0.1 * (t % 5), rng);
    bool wagner = !has_minor(g, k5) && !has_minor(g, k33);
    CHECK(is_planar(g) == wagner);
  }
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(k5));
  CHECK_FALSE(is_planar(k33));
  CHECK(is_planar(cycle_graph(30)));
}

TEST_CASE("apex vertices") {
  CHECK(apex_vertices(complete_graph(7)).empty());
  CHECK_FALSE(is_apex(complete_graph(7)));
  Graph k5 = complete_graph(5);
  CHECK(apex_vertices(k5).size() == 5);  // K5 minus any vertex is K4
  CHECK(is_apex(k5));
  CHECK(is_apex(complete_bipartite(3, 3)));
}
