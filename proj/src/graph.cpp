#include "forge/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace forge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::LabelCollision: return "LabelCollision";
    case Errc::GlueNotClique: return "GlueNotClique";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotATriangle: return "NotATriangle";
    case Errc::DegreeNotThree: return "DegreeNotThree";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAvailable: return "NotAvailable";
    case Errc::NoValidPartition: return "NoValidPartition";
    case Errc::RecipeUnavailable: return "RecipeUnavailable";
    case Errc::FileMissing: return "FileMissing";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::CertificateInvalid: return "CertificateInvalid";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

bool natural_less(const Label& a, const Label& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    char ca = a[i], cb = b[j];
    bool da = std::isdigit(static_cast<unsigned char>(ca));
    bool db = std::isdigit(static_cast<unsigned char>(cb));
    if (da && db) {
      size_t si = i, sj = j;
      while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
      while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
      // strip leading zeros
      size_t pi = si, pj = sj;
      while (pi + 1 < i && a[pi] == '0') ++pi;
      while (pj + 1 < j && b[pj] == '0') ++pj;
      size_t la = i - pi, lb = j - pj;
      if (la != lb) return la < lb;
      int cmp = a.compare(pi, la, b, pj, lb);
      if (cmp != 0) return cmp < 0;
      // equal values: fewer leading zeros first
      if (i - si != j - sj) return i - si < j - sj;
    } else if (da != db) {
      return da;  // digits before letters
    } else {
      if (ca != cb) return ca < cb;
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

Edge make_edge(Label u, Label v) {
  if (u == v) fail(Errc::LoopEdge, "loop at " + u);
  if (natural_less(v, u)) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

Graph Graph::from_edges(const std::vector<Label>& vertices, const std::vector<Edge>& edges) {
  Graph g;
  for (const auto& v : vertices) g.insert_vertex(v);
  for (const auto& [u, v] : edges) g.insert_edge(u, v);
  return g;
}

int Graph::size() const {
  int deg_sum = 0;
  for (const auto& [v, nbrs] : adj_) deg_sum += static_cast<int>(nbrs.size());
  return deg_sum / 2;
}

bool Graph::has_edge(const Label& u, const Label& v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

int Graph::degree(const Label& v) const { return static_cast<int>(neighbors(v).size()); }

const LabelSet& Graph::neighbors(const Label& v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) fail(Errc::UnknownVertex, "no vertex " + v);
  return it->second;
}

std::vector<Label> Graph::vertices() const {
  std::vector<Label> out;
  out.reserve(adj_.size());
  for (const auto& [v, nbrs] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, nbrs] : adj_)
    for (const auto& w : nbrs)
      if (natural_less(v, w)) out.emplace_back(v, w);
  return out;
}

void Graph::insert_vertex(const Label& v) {
  if (v.empty()) fail(Errc::MalformedInput, "empty label");
  if (!adj_.emplace(v, LabelSet{}).second) fail(Errc::LabelCollision, "vertex " + v + " already present");
}

void Graph::insert_edge(const Label& u, const Label& v) {
  if (u == v) fail(Errc::LoopEdge, "loop at " + u);
  auto iu = adj_.find(u), iv = adj_.find(v);
  if (iu == adj_.end()) fail(Errc::UnknownVertex, "no vertex " + u);
  if (iv == adj_.end()) fail(Errc::UnknownVertex, "no vertex " + v);
  if (iu->second.count(v)) fail(Errc::DuplicateEdge, "edge {" + u + "," + v + "} already present");
  iu->second.insert(v);
  iv->second.insert(u);
}

void Graph::erase_vertex(const Label& v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) fail(Errc::UnknownVertex, "no vertex " + v);
  for (const auto& w : it->second) adj_[w].erase(v);
  adj_.erase(it);
}

void Graph::erase_edge(const Label& u, const Label& v) {
  if (!has_edge(u, v)) fail(Errc::NotAnEdge, "no edge {" + u + "," + v + "}");
  adj_[u].erase(v);
  adj_[v].erase(u);
}

Graph add_edge(const Graph& g, const Label& u, const Label& v) {
  Graph out = g;
  out.insert_edge(u, v);
  return out;
}

Graph delete_vertex(const Graph& g, const Label& v) {
  Graph out = g;
  out.erase_vertex(v);
  return out;
}

Graph delete_edge(const Graph& g, const Label& u, const Label& v) {
  Graph out = g;
  out.erase_edge(u, v);
  return out;
}

Graph contract_edge(const Graph& g, const Label& u, const Label& v) {
  if (!g.has_edge(u, v)) fail(Errc::NotAnEdge, "no edge {" + u + "," + v + "}");
  const Label& keep = natural_less(u, v) ? u : v;
  const Label& drop = natural_less(u, v) ? v : u;
  Graph out = g;
  LabelSet moved = g.neighbors(drop);
  out.erase_vertex(drop);
  for (const auto& w : moved)
    if (w != keep && !out.has_edge(keep, w)) out.insert_edge(keep, w);
  return out;
}

Graph induced_subgraph(const Graph& g, const LabelSet& s) {
  Graph out;
  for (const auto& v : s) {
    if (!g.has_vertex(v)) fail(Errc::UnknownVertex, "no vertex " + v);
    out.insert_vertex(v);
  }
  for (const auto& v : s)
    for (const auto& w : g.neighbors(v))
      if (natural_less(v, w) && s.count(w)) out.insert_edge(v, w);
  return out;
}

bool is_spanning_edge_subgraph(const Graph& t, const Graph& s) {
  if (t.vertices() != s.vertices()) return false;
  for (const auto& [u, v] : t.edges())
    if (!s.has_edge(u, v)) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto verts = g.vertices();
  LabelSet seen;
  std::queue<Label> q;
  q.push(verts.front());
  seen.insert(verts.front());
  while (!q.empty()) {
    Label v = q.front();
    q.pop();
    for (const auto& w : g.neighbors(v))
      if (seen.insert(w).second) q.push(w);
  }
  return static_cast<int>(seen.size()) == g.order();
}

static std::vector<Label> numbered(int n) {
  std::vector<Label> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Graph complete_graph(int n) {
  auto vs = numbered(n);
  Graph g;
  for (const auto& v : vs) g.insert_vertex(v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.insert_edge(vs[i], vs[j]);
  return g;
}

Graph cycle_graph(int n) {
  auto vs = numbered(n);
  Graph g;
  for (const auto& v : vs) g.insert_vertex(v);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.insert_edge(vs[i], vs[(i + 1) % n]);
  return g;
}

Graph path_graph(int n) {
  auto vs = numbered(n);
  Graph g;
  for (const auto& v : vs) g.insert_vertex(v);
  for (int i = 0; i + 1 < n; ++i) g.insert_edge(vs[i], vs[i + 1]);
  return g;
}

Graph complete_bipartite(int a, int b) {
  auto vs = numbered(a + b);
  Graph g;
  for (const auto& v : vs) g.insert_vertex(v);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) g.insert_edge(vs[i], vs[j]);
  return g;
}

IndexedGraph index_graph(const Graph& g) {
  IndexedGraph ig;
  ig.labels = g.vertices();
  ig.n = static_cast<int>(ig.labels.size());
  for (int i = 0; i < ig.n; ++i) ig.index[ig.labels[i]] = i;
  ig.adj.assign(ig.n, {});
  if (ig.n <= 64) ig.mask.assign(ig.n, 0);
  for (int i = 0; i < ig.n; ++i) {
    for (const auto& w : g.neighbors(ig.labels[i])) {
      int j = ig.index[w];
      ig.adj[i].push_back(j);
      if (!ig.mask.empty()) ig.mask[i] |= (1ULL << j);
    }
  }
  return ig;
}

}  // namespace forge
