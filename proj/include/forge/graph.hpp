#pragma once
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forge/error.hpp"

namespace forge {

using Label = std::string;

// Numeric-aware label order: digit runs compare by value, digits sort before
// letters, so "2" < "9" < "10" < "a" < "a'".
bool natural_less(const Label& a, const Label& b);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(const Label& a, const Label& b) const { return natural_less(a, b); }
};

using LabelSet = std::set<Label, NaturalLess>;
using Edge = std::pair<Label, Label>;  // normalized: first precedes second

Edge make_edge(Label u, Label v);

// Finite simple undirected graph with distinct ordered vertex labels.
// Values are immutable once built; all operations on them are pure.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(const std::vector<Label>& vertices,
                          const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;  // number of edges
  bool has_vertex(const Label& v) const { return adj_.count(v) != 0; }
  bool has_edge(const Label& u, const Label& v) const;
  int degree(const Label& v) const;
  const LabelSet& neighbors(const Label& v) const;

  std::vector<Label> vertices() const;  // in natural order
  std::vector<Edge> edges() const;      // normalized, sorted

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  // Mutators used by construction code inside the library. They keep the
  // simple-graph invariants and throw on violations.
  void insert_vertex(const Label& v);
  void insert_edge(const Label& u, const Label& v);  // endpoints must exist
  void erase_vertex(const Label& v);
  void erase_edge(const Label& u, const Label& v);

 private:
  std::map<Label, LabelSet, NaturalLess> adj_;
};

// Pure operations per the core contract. Inputs are never modified.
Graph add_edge(const Graph& g, const Label& u, const Label& v);
Graph delete_vertex(const Graph& g, const Label& v);
Graph delete_edge(const Graph& g, const Label& u, const Label& v);
// Merges v into u keeping the order-smaller label; output is simple.
Graph contract_edge(const Graph& g, const Label& u, const Label& v);
Graph induced_subgraph(const Graph& g, const LabelSet& s);
bool is_spanning_edge_subgraph(const Graph& t, const Graph& s);

bool is_connected(const Graph& g);  // true for the empty graph

// Convenience builders used all over the tests and the family module.
Graph complete_graph(int n);                    // labels "1".."n"
Graph cycle_graph(int n);                       // labels "1".."n"
Graph path_graph(int n);                        // labels "1".."n"
Graph complete_bipartite(int a, int b);         // labels "1".."a+b"

// Index view for the algorithmic engines: vertices numbered 0..n-1 in label
// order, adjacency as lists plus bitmasks when n <= 64.
struct IndexedGraph {
  std::vector<Label> labels;
  std::map<Label, int, NaturalLess> index;
  std::vector<std::vector<int>> adj;
  std::vector<std::uint64_t> mask;  // empty when order > 64
  int n = 0;
};

IndexedGraph index_graph(const Graph& g);

}  // namespace forge
