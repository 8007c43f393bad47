// Left-right planarity criterion (de Fraysseix-Rosenstiehl, Brandes'
// formulation). Testing only; no embedding is produced.
#include <algorithm>
#include <vector>

#include "forge/verify.hpp"

namespace forge {

namespace {

constexpr int kNone = -1;

struct Interval {
  int lo = kNone, hi = kNone;  // directed edge ids
  bool empty() const { return lo == kNone && hi == kNone; }
};

struct ConflictPair {
  Interval L, R;
  void swap_sides() { std::swap(L, R); }
};

struct LRPlanarity {
  int n = 0;
  std::vector<std::vector<int>> adj;

  // directed edges allocated during orientation
  std::vector<int> esrc, edst;
  std::vector<std::vector<char>> oriented;  // undirected pair already handled
  std::vector<int> lowpt, lowpt2, nesting, lowpt_edge, ref;
  std::vector<size_t> stack_bottom;
  std::vector<int> height, parent_edge;      // per vertex
  std::vector<std::vector<int>> out_edges;   // oriented out edge ids per vertex
  std::vector<ConflictPair> S;

  explicit LRPlanarity(const IndexedGraph& ig) : n(ig.n), adj(ig.adj) {
    oriented.assign(n, std::vector<char>(n, 0));
    height.assign(n, kNone);
    parent_edge.assign(n, kNone);
    out_edges.assign(n, {});
  }

  int new_edge(int u, int v) {
    esrc.push_back(u);
    edst.push_back(v);
    lowpt.push_back(0);
    lowpt2.push_back(0);
    nesting.push_back(0);
    lowpt_edge.push_back(kNone);
    ref.push_back(kNone);
    stack_bottom.push_back(0);
    return static_cast<int>(esrc.size()) - 1;
  }

  void dfs_orient(int v) {
    int e = parent_edge[v];
    for (int w : adj[v]) {
      if (oriented[v][w]) continue;
      oriented[v][w] = oriented[w][v] = 1;
      int vw = new_edge(v, w);
      out_edges[v].push_back(vw);
      lowpt[vw] = height[v];
      lowpt2[vw] = height[v];
      if (height[w] == kNone) {  // tree edge
        parent_edge[w] = vw;
        height[w] = height[v] + 1;
        dfs_orient(w);
      } else {  // back edge
        lowpt[vw] = height[w];
      }
      nesting[vw] = 2 * lowpt[vw];
      if (lowpt2[vw] < height[v]) ++nesting[vw];  // chordal, nest inside
      if (e != kNone) {
        if (lowpt[vw] < lowpt[e]) {
          lowpt2[e] = std::min(lowpt[e], lowpt2[vw]);
          lowpt[e] = lowpt[vw];
        } else if (lowpt[vw] > lowpt[e]) {
          lowpt2[e] = std::min(lowpt2[e], lowpt[vw]);
        } else {
          lowpt2[e] = std::min(lowpt2[e], lowpt2[vw]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt[i.hi] > lowpt[b];
  }

  int pair_lowest(const ConflictPair& p) const {
    if (p.L.empty()) return lowpt[p.R.lo];
    if (p.R.empty()) return lowpt[p.L.lo];
    return std::min(lowpt[p.L.lo], lowpt[p.R.lo]);
  }

  bool add_constraints(int ei, int e) {
    ConflictPair P;
    // merge return edges of ei into P.R
    while (true) {
      ConflictPair Q = S.back();
      S.pop_back();
      if (!Q.L.empty()) Q.swap_sides();
      if (!Q.L.empty()) return false;  // not planar
      if (lowpt[Q.R.lo] > lowpt[e]) {  // merge intervals
        if (P.R.empty())
          P.R.hi = Q.R.hi;
        else
          ref[P.R.lo] = Q.R.hi;
        P.R.lo = Q.R.lo;
      } else {  // align
        ref[Q.R.lo] = lowpt_edge[e];
      }
      if (S.size() == stack_bottom[ei]) break;
    }
    // merge conflicting return edges of earlier siblings into P.L
    while (conflicting(S.back().L, ei) || conflicting(S.back().R, ei)) {
      ConflictPair Q = S.back();
      S.pop_back();
      if (conflicting(Q.R, ei)) Q.swap_sides();
      if (conflicting(Q.R, ei)) return false;  // not planar
      // merge interval below lowpt(ei) into P.R
      ref[P.R.lo] = Q.R.hi;
      if (Q.R.lo != kNone) P.R.lo = Q.R.lo;
      if (P.L.empty())
        P.L.hi = Q.L.hi;
      else
        ref[P.L.lo] = Q.L.hi;
      P.L.lo = Q.L.lo;
    }
    if (!(P.L.empty() && P.R.empty())) S.push_back(P);
    return true;
  }

  void remove_back_edges(int e) {
    int u = esrc[e];
    // trim back edges ending at parent u
    while (!S.empty() && pair_lowest(S.back()) == height[u]) S.pop_back();
    if (!S.empty()) {
      ConflictPair P = S.back();
      S.pop_back();
      while (P.L.hi != kNone && edst[P.L.hi] == u) P.L.hi = ref[P.L.hi];
      if (P.L.hi == kNone && P.L.lo != kNone) {
        ref[P.L.lo] = P.R.lo;
        P.L.lo = kNone;
      }
      while (P.R.hi != kNone && edst[P.R.hi] == u) P.R.hi = ref[P.R.hi];
      if (P.R.hi == kNone && P.R.lo != kNone) {
        ref[P.R.lo] = P.L.lo;
        P.R.lo = kNone;
      }
      S.push_back(P);
    }
    if (lowpt[e] < height[u]) {  // e has a return edge
      int hl = S.back().L.hi;
      int hr = S.back().R.hi;
      if (hl != kNone && (hr == kNone || lowpt[hl] > lowpt[hr]))
        ref[e] = hl;
      else
        ref[e] = hr;
    }
  }

  bool dfs_test(int v) {
    int e = parent_edge[v];
    bool first = true;
    for (int ei : out_edges[v]) {
      stack_bottom[ei] = S.size();
      if (ei == parent_edge[edst[ei]]) {  // tree edge
        if (!dfs_test(edst[ei])) return false;
      } else {  // back edge
        lowpt_edge[ei] = ei;
        ConflictPair cp;
        cp.R = Interval{ei, ei};
        S.push_back(cp);
      }
      if (lowpt[ei] < height[v]) {  // ei has a return edge
        if (first) {
          lowpt_edge[e] = lowpt_edge[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
      first = false;
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool run() {
    for (int v = 0; v < n; ++v)
      if (height[v] == kNone) {
        height[v] = 0;
        dfs_orient(v);
      }
    for (int v = 0; v < n; ++v) {
      std::sort(out_edges[v].begin(), out_edges[v].end(),
                [&](int a, int b) { return nesting[a] < nesting[b]; });
    }
    for (int v = 0; v < n; ++v)
      if (parent_edge[v] == kNone)
        if (!dfs_test(v)) return false;
    return true;
  }
};

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n < 5) return true;
  if (g.size() > 3 * n - 6) return false;
  IndexedGraph ig = index_graph(g);
  LRPlanarity lr(ig);
  return lr.run();
}

}  // namespace forge
