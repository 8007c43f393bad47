#pragma once
#include <vector>

#include "forge/graph.hpp"

namespace forge {

// Slater n-vertex splitting. The neighbor partition is explicit: part_a stays
// with the split vertex, part_b moves to the new vertex, and the two become
// adjacent. Both resulting degrees are at least n.
struct SplitSpec {
  Label target;
  Label new_label;
  LabelSet part_a;
  LabelSet part_b;
  int n = 4;
};

Graph vertex_split(const Graph& g, const SplitSpec& spec);

// Clique sum over K_p: glue lists are identified pairwise in order. Vertices
// exclusive to g2 that collide with g1 labels get prime marks appended.
struct CliqueSumSpec {
  std::vector<Label> glue_left;
  std::vector<Label> glue_right;
};

Graph clique_sum(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec);

// Delta-wye moves.
Graph triangle_to_y(const Graph& g, const Label& x, const Label& y, const Label& z,
                    const Label& new_label);
Graph y_to_triangle(const Graph& g, const Label& w);

// Breadth-first closure of {K6} under both moves, deduplicated by canonical
// form, ordered by (vertex count, canonical code). The Petersen family.
std::vector<Graph> petersen_closure();

}  // namespace forge
