#pragma once
#include <array>
#include <limits>
#include <optional>

#include "forge/graph.hpp"

namespace forge {

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

std::optional<std::array<Label, 3>> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

struct CutWitness {
  LabelSet separator;  // empty when the graph is already disconnected
  Label s, t;          // a pair separated by the cut
};

struct ConnectivityResult {
  bool ok = false;
  std::optional<CutWitness> witness;  // present when ok is false
};

// Exact test via Menger: vertex-disjoint path count between non-adjacent
// pairs, computed by unit-capacity max flow on the split digraph.
ConnectivityResult vertex_connectivity_at_least(const Graph& g, int k);

// Re-verifies a witness by reachability after deletion.
bool cut_witness_disconnects(const Graph& g, const CutWitness& w);

int girth(const Graph& g);  // kInfiniteGirth for forests

bool is_planar(const Graph& g);  // left-right criterion, exact

LabelSet apex_vertices(const Graph& g);
bool is_apex(const Graph& g);

}  // namespace forge
