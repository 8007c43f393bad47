#include "forge/iso.hpp"

#include <algorithm>
#include <set>

namespace forge {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: repeatedly split cells by the vector of neighbor
// counts per cell, ordering subcells by key. The outcome and the cell order
// are isomorphism-invariant.
void refine(const IndexedGraph& ig, Cells& cells) {
  const int n = ig.n;
  std::vector<int> color(n, 0);
  bool changed = true;
  while (changed) {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      for (int v : cells[c]) color[v] = c;
    changed = false;
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> key(cells.size(), 0);
        for (int w : ig.adj[v]) ++key[color[w]];
        split[key].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [key, sub] : split) next.push_back(std::move(sub));
    }
    cells = std::move(next);
  }
}

struct CanonSearch {
  const IndexedGraph& ig;
  std::string best;
  std::vector<int> best_perm;
  bool have_best = false;

  explicit CanonSearch(const IndexedGraph& g) : ig(g) {}

  bool adjacent(int u, int v) const { return (ig.mask[u] >> v) & 1ULL; }

  // Column-major upper-triangle bits among the first k fixed vertices; the
  // bits determined by a singleton prefix form a prefix of the certificate.
  std::string bits_among(const std::vector<int>& fixed) const {
    std::string out;
    const int k = static_cast<int>(fixed.size());
    out.reserve(k * (k - 1) / 2);
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) out.push_back(adjacent(fixed[i], fixed[j]) ? '1' : '0');
    return out;
  }

  void search(Cells cells) {
    refine(ig, cells);
    std::vector<int> fixed;
    size_t lead = 0;
    while (lead < cells.size() && cells[lead].size() == 1) fixed.push_back(cells[lead++][0]);
    std::string partial = bits_among(fixed);
    if (have_best) {
      int cmp = best.compare(0, partial.size(), partial);
      if (cmp < 0) return;  // strictly worse than best prefix
    }
    if (lead == cells.size()) {
      if (!have_best || partial < best) {
        best = std::move(partial);
        best_perm = std::move(fixed);
        have_best = true;
      }
      return;
    }
    const std::vector<int> target = cells[lead];
    for (int v : target) {
      Cells child(cells.begin(), cells.begin() + lead);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : target)
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + lead + 1, cells.end());
      search(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > 64) fail(Errc::SizeLimitExceeded, "order " + std::to_string(g.order()) + " > 64");
  CanonicalForm cf;
  IndexedGraph ig = index_graph(g);
  if (ig.n == 0) {
    cf.code = "0:";
    return cf;
  }
  CanonSearch s(ig);
  std::vector<int> all(ig.n);
  for (int i = 0; i < ig.n; ++i) all[i] = i;
  s.search({all});
  cf.code = std::to_string(ig.n) + ":" + s.best;
  for (int pos = 0; pos < ig.n; ++pos) cf.position[ig.labels[s.best_perm[pos]]] = pos;
  return cf;
}

std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

std::optional<Isomorphism> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  CanonicalForm cg = canonical_form(g);
  CanonicalForm ch = canonical_form(h);
  if (cg.code != ch.code) return std::nullopt;
  std::vector<Label> h_at(h.order());
  for (const auto& [label, pos] : ch.position) h_at[pos] = label;
  Isomorphism m;
  for (const auto& [label, pos] : cg.position) m[label] = h_at[pos];
  return m;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

bool check_isomorphism(const Graph& g, const Graph& h, const Isomorphism& m) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (static_cast<int>(m.size()) != g.order()) return false;
  std::set<Label> image;
  for (const auto& [u, mu] : m) {
    if (!g.has_vertex(u) || !h.has_vertex(mu)) return false;
    if (!image.insert(mu).second) return false;
  }
  for (const auto& [u, v] : g.edges())
    if (!h.has_edge(m.at(u), m.at(v))) return false;
  return true;
}

}  // namespace forge
