#include "forge/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "forge/iso.hpp"

namespace forge {

Graph vertex_split(const Graph& g, const SplitSpec& spec) {
  if (!g.has_vertex(spec.target)) fail(Errc::UnknownVertex, "no vertex " + spec.target);
  const int need = 2 * spec.n - 2;
  if (g.degree(spec.target) < need)
    fail(Errc::DegreeTooLow, "vertex " + spec.target + " has degree " + std::to_string(g.degree(spec.target)) +
                                 " < " + std::to_string(need));
  if (g.has_vertex(spec.new_label)) fail(Errc::LabelCollision, "vertex " + spec.new_label + " already present");
  const LabelSet& nbrs = g.neighbors(spec.target);
  if (static_cast<int>(spec.part_a.size()) < spec.n - 1 || static_cast<int>(spec.part_b.size()) < spec.n - 1)
    fail(Errc::InvalidPartition, "each part needs at least " + std::to_string(spec.n - 1) + " vertices");
  if (spec.part_a.size() + spec.part_b.size() != nbrs.size())
    fail(Errc::InvalidPartition, "parts do not cover the neighborhood of " + spec.target);
  for (const auto& v : spec.part_a)
    if (!nbrs.count(v) || spec.part_b.count(v))
      fail(Errc::InvalidPartition, "bad part member " + v);
  for (const auto& v : spec.part_b)
    if (!nbrs.count(v)) fail(Errc::InvalidPartition, "bad part member " + v);

  Graph out = g;
  for (const auto& v : spec.part_b) out.erase_edge(spec.target, v);
  out.insert_vertex(spec.new_label);
  for (const auto& v : spec.part_b) out.insert_edge(spec.new_label, v);
  out.insert_edge(spec.target, spec.new_label);
  return out;
}

static void check_glue_clique(const Graph& g, const std::vector<Label>& glue, const char* side) {
  for (const auto& v : glue)
    if (!g.has_vertex(v)) fail(Errc::UnknownVertex, std::string(side) + " glue vertex " + v + " missing");
  for (size_t i = 0; i < glue.size(); ++i)
    for (size_t j = i + 1; j < glue.size(); ++j) {
      if (glue[i] == glue[j]) fail(Errc::GlueNotClique, std::string(side) + " glue repeats " + glue[i]);
      if (!g.has_edge(glue[i], glue[j]))
        fail(Errc::GlueNotClique, std::string(side) + " glue pair {" + glue[i] + "," + glue[j] + "} not an edge");
    }
}

Graph clique_sum(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec) {
  if (spec.glue_left.size() != spec.glue_right.size())
    fail(Errc::LengthMismatch, "glue lists have different lengths");
  if (spec.glue_left.empty()) fail(Errc::LengthMismatch, "glue must have order >= 1");
  check_glue_clique(g1, spec.glue_left, "left");
  check_glue_clique(g2, spec.glue_right, "right");

  Graph out = g1;
  std::map<Label, Label, NaturalLess> rename;  // g2 label -> label in out
  for (size_t i = 0; i < spec.glue_right.size(); ++i) rename[spec.glue_right[i]] = spec.glue_left[i];
  for (const auto& v : g2.vertices()) {
    if (rename.count(v)) continue;
    Label name = v;
    while (out.has_vertex(name)) name += "'";
    rename[v] = name;
    out.insert_vertex(name);
  }
  for (const auto& [u, v] : g2.edges()) {
    const Label& a = rename.at(u);
    const Label& b = rename.at(v);
    if (!out.has_edge(a, b)) out.insert_edge(a, b);
  }
  return out;
}

Graph triangle_to_y(const Graph& g, const Label& x, const Label& y, const Label& z, const Label& new_label) {
  for (const auto* v : {&x, &y, &z})
    if (!g.has_vertex(*v)) fail(Errc::UnknownVertex, "no vertex " + *v);
  if (x == y || y == z || x == z || !g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z))
    fail(Errc::NotATriangle, "{" + x + "," + y + "," + z + "} does not induce a triangle");
  if (g.has_vertex(new_label)) fail(Errc::LabelCollision, "vertex " + new_label + " already present");
  Graph out = g;
  out.erase_edge(x, y);
  out.erase_edge(y, z);
  out.erase_edge(x, z);
  out.insert_vertex(new_label);
  out.insert_edge(new_label, x);
  out.insert_edge(new_label, y);
  out.insert_edge(new_label, z);
  return out;
}

Graph y_to_triangle(const Graph& g, const Label& w) {
  if (!g.has_vertex(w)) fail(Errc::UnknownVertex, "no vertex " + w);
  if (g.degree(w) != 3)
    fail(Errc::DegreeNotThree, "vertex " + w + " has degree " + std::to_string(g.degree(w)));
  std::vector<Label> nbrs(g.neighbors(w).begin(), g.neighbors(w).end());
  Graph out = delete_vertex(g, w);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      if (!out.has_edge(nbrs[i], nbrs[j])) out.insert_edge(nbrs[i], nbrs[j]);  // merge convention
  return out;
}

// Relabel to "1".."n" following the canonical order, so closure members are
// concrete graphs with predictable fresh labels.
static Graph canonical_relabel(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  Graph out;
  for (int i = 1; i <= g.order(); ++i) out.insert_vertex(std::to_string(i));
  for (const auto& [u, v] : g.edges())
    out.insert_edge(std::to_string(cf.position.at(u) + 1), std::to_string(cf.position.at(v) + 1));
  return out;
}

std::vector<Graph> petersen_closure() {
  std::map<std::string, Graph> seen;
  std::deque<Graph> frontier;
  Graph k6 = canonical_relabel(complete_graph(6));
  seen[canonical_code(k6)] = k6;
  frontier.push_back(k6);
  while (!frontier.empty()) {
    Graph g = frontier.front();
    frontier.pop_front();
    std::vector<Graph> moves;
    auto verts = g.vertices();
    const int n = g.order();
    Label fresh = std::to_string(n + 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!g.has_edge(verts[i], verts[j])) continue;
        for (int k = j + 1; k < n; ++k)
          if (g.has_edge(verts[i], verts[k]) && g.has_edge(verts[j], verts[k]))
            moves.push_back(triangle_to_y(g, verts[i], verts[j], verts[k], fresh));
      }
    for (const auto& v : verts)
      if (g.degree(v) == 3) moves.push_back(y_to_triangle(g, v));
    for (const auto& m : moves) {
      std::string code = canonical_code(m);
      if (seen.count(code)) continue;
      Graph norm = canonical_relabel(m);
      seen[code] = norm;
      frontier.push_back(norm);
    }
  }
  std::vector<Graph> out;
  for (const auto& [code, g] : seen) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return canonical_code(a) < canonical_code(b);
  });
  return out;
}

}  // namespace forge
