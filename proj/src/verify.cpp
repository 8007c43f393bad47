#include "forge/verify.hpp"

#include <algorithm>
#include <queue>

namespace forge {

std::optional<std::array<Label, 3>> find_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    const LabelSet& nu = g.neighbors(u);
    const LabelSet& nv = g.neighbors(v);
    for (const auto& w : (nu.size() < nv.size() ? nu : nv))
      if (nu.count(w) && nv.count(w)) return std::array<Label, 3>{u, v, w};
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

// Unit vertex-capacity max flow between s and t on the split digraph,
// stopping once `cap` disjoint paths are found. Returns the flow value and,
// when below cap, the min vertex cut.
struct MengerFlow {
  const IndexedGraph& ig;
  int n;
  // node 2*v = v_in, 2*v+1 = v_out
  std::vector<std::vector<int>> cap;   // residual capacities, parallel to nbr
  std::vector<std::vector<int>> nbr;   // residual adjacency (node ids)
  std::vector<std::vector<int>> back;  // index of reverse arc in nbr[to]

  explicit MengerFlow(const IndexedGraph& g) : ig(g), n(g.n) {
    nbr.assign(2 * n, {});
    cap.assign(2 * n, {});
    back.assign(2 * n, {});
    // edge arcs must dominate vertex arcs or the residual cut could cross
    // an edge instead of a vertex
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (int v = 0; v < n; ++v)
      for (int w : ig.adj[v]) add_arc(2 * v + 1, 2 * w, n);
  }

  void add_arc(int a, int b, int c) {
    nbr[a].push_back(b);
    cap[a].push_back(c);
    back[a].push_back(static_cast<int>(nbr[b].size()));
    nbr[b].push_back(a);
    cap[b].push_back(0);
    back[b].push_back(static_cast<int>(nbr[a].size()) - 1);
  }

  int run(int s, int t, int want, std::vector<int>* cut_out) {
    // source/sink use their out/in node directly, which removes their own
    // vertex capacity from the cut
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    std::vector<int> prev_node(2 * n), prev_arc(2 * n);
    while (flow < want) {
      std::fill(prev_node.begin(), prev_node.end(), -1);
      std::queue<int> q;
      q.push(src);
      prev_node[src] = src;
      while (!q.empty() && prev_node[dst] < 0) {
        int a = q.front();
        q.pop();
        for (size_t i = 0; i < nbr[a].size(); ++i) {
          int b = nbr[a][i];
          if (cap[a][i] > 0 && prev_node[b] < 0) {
            prev_node[b] = a;
            prev_arc[b] = static_cast<int>(i);
            q.push(b);
          }
        }
      }
      if (prev_node[dst] < 0) break;
      for (int b = dst; b != src; b = prev_node[b]) {
        int a = prev_node[b], i = prev_arc[b];
        --cap[a][i];
        ++cap[b][back[a][i]];
      }
      ++flow;
    }
    if (cut_out && flow < want) {
      // vertices whose in-node is reachable but out-node is not form the cut
      std::vector<char> reach(2 * n, 0);
      std::queue<int> q;
      q.push(src);
      reach[src] = 1;
      while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (size_t i = 0; i < nbr[a].size(); ++i)
          if (cap[a][i] > 0 && !reach[nbr[a][i]]) {
            reach[nbr[a][i]] = 1;
            q.push(nbr[a][i]);
          }
      }
      cut_out->clear();
      for (int v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) cut_out->push_back(v);
    }
    return flow;
  }
};

}  // namespace

ConnectivityResult vertex_connectivity_at_least(const Graph& g, int k) {
  if (k < 1) fail(Errc::TooFewVertices, "k must be >= 1");
  if (g.order() < k + 1)
    fail(Errc::TooFewVertices, "need at least k+1 = " + std::to_string(k + 1) + " vertices");
  ConnectivityResult res;
  if (!is_connected(g)) {
    auto verts = g.vertices();
    // any vertex outside the component of the first vertex
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
    Label other;
    for (const auto& v : verts)
      if (!seen.count(v)) {
        other = v;
        break;
      }
    res.ok = false;
    res.witness = CutWitness{{}, verts.front(), other};
    return res;
  }
  IndexedGraph ig = index_graph(g);
  for (int s = 0; s < ig.n; ++s) {
    for (int t = s + 1; t < ig.n; ++t) {
      bool adjacent = std::find(ig.adj[s].begin(), ig.adj[s].end(), t) != ig.adj[s].end();
      if (adjacent) continue;
      MengerFlow flow(ig);
      std::vector<int> cut;
      int f = flow.run(s, t, k, &cut);
      if (f < k) {
        CutWitness w;
        for (int v : cut) w.separator.insert(ig.labels[v]);
        w.s = ig.labels[s];
        w.t = ig.labels[t];
        res.ok = false;
        res.witness = std::move(w);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

bool cut_witness_disconnects(const Graph& g, const CutWitness& w) {
  if (!g.has_vertex(w.s) || !g.has_vertex(w.t)) return false;
  if (w.separator.count(w.s) || w.separator.count(w.t)) return false;
  LabelSet seen;
  std::queue<Label> q;
  q.push(w.s);
  seen.insert(w.s);
  while (!q.empty()) {
    Label v = q.front();
    q.pop();
    for (const auto& x : g.neighbors(v)) {
      if (w.separator.count(x)) continue;
      if (x == w.t) return false;
      if (seen.insert(x).second) q.push(x);
    }
  }
  return true;
}

int girth(const Graph& g) {
  IndexedGraph ig = index_graph(g);
  int best = kInfiniteGirth;
  std::vector<int> dist(ig.n), parent(ig.n);
  for (int root = 0; root < ig.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    q.push(root);
    dist[root] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : ig.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v] && v < w) {
          // non-tree edge closes a walk containing a cycle of this length
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

LabelSet apex_vertices(const Graph& g) {
  LabelSet out;
  for (const auto& v : g.vertices())
    if (is_planar(delete_vertex(g, v))) out.insert(v);
  return out;
}

bool is_apex(const Graph& g) {
  if (is_planar(g)) return true;
  return !apex_vertices(g).empty();
}

}  // namespace forge
