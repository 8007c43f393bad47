#include "forge/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "forge/iso.hpp"
#include "forge/transform.hpp"

namespace forge {

namespace {

inline uint64_t bit(int v) { return 1ULL << v; }
inline int popcount(uint64_t m) { return std::popcount(m); }

// Host graph under reduction; each surviving vertex represents a connected
// set of original vertices (suppression contracts edges).
struct ReducedHost {
  int n = 0;
  std::vector<uint64_t> adj;        // over reduced indices
  std::vector<uint64_t> rep;        // reduced index -> original-vertex mask
  std::vector<Label> orig_labels;   // original host labels by original index
};

// Sound reductions: drop degree<=1 vertices when min deg of the target is
// >= 2; contract degree-2 vertices into a neighbor when it is >= 3.
ReducedHost reduce_host(const IndexedGraph& ig, int target_min_deg) {
  int n = ig.n;
  std::vector<uint64_t> adj(n, 0);
  std::vector<uint64_t> rep(n, 0);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) {
    adj[v] = ig.mask[v];
    rep[v] = bit(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n && target_min_deg >= 2; ++v) {
      if (!alive[v]) continue;
      int d = popcount(adj[v]);
      if (d <= 1) {
        for (int w = 0; w < n; ++w) adj[w] &= ~bit(v);
        adj[v] = 0;
        alive[v] = 0;
        changed = true;
      } else if (d == 2 && target_min_deg >= 3) {
        int u = std::countr_zero(adj[v]);
        // contract v into u
        uint64_t moved = adj[v] & ~bit(u);
        adj[u] |= moved;
        adj[u] &= ~(bit(v) | bit(u));
        for (int w = 0; w < n; ++w)
          if (w != u && (adj[w] & bit(v))) {
            adj[w] &= ~bit(v);
            adj[w] |= bit(u);
          }
        adj[v] = 0;
        rep[u] |= rep[v];
        alive[v] = 0;
        changed = true;
      }
    }
  }
  ReducedHost out;
  std::vector<int> newid(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) newid[v] = out.n++;
  out.adj.assign(out.n, 0);
  out.rep.assign(out.n, 0);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    out.rep[newid[v]] = rep[v];
    uint64_t m = adj[v];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      out.adj[newid[v]] |= bit(newid[w]);
    }
  }
  out.orig_labels = ig.labels;
  return out;
}

// Backtracking check for an automorphism mapping src to dst. Vertices are
// assigned in the order src, 0, 1, ... with adjacency consistency.
bool maps_to(const std::vector<uint64_t>& adj, int n, int src, int dst) {
  std::vector<int> order;
  order.push_back(src);
  for (int v = 0; v < n; ++v)
    if (v != src) order.push_back(v);
  std::vector<int> img(n, -1);
  std::vector<char> taken(n, 0);
  img[src] = dst;
  taken[dst] = 1;
  if (n == 1) return true;
  struct Frame {
    int pos;
    int cand;
  };
  std::vector<Frame> frames{{1, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    int v = order[f.pos];
    bool advanced = false;
    for (int c = f.cand; c < n; ++c) {
      if (taken[c]) continue;
      bool ok = popcount(adj[v]) == popcount(adj[c]);
      for (int p = 0; ok && p < f.pos; ++p) {
        int u = order[p];
        if (((adj[v] >> u) & 1) != ((adj[c] >> img[u]) & 1)) ok = false;
      }
      if (!ok) continue;
      f.cand = c + 1;
      img[v] = c;
      taken[c] = 1;
      if (f.pos + 1 == n) return true;
      frames.push_back({f.pos + 1, 0});
      advanced = true;
      break;
    }
    if (!advanced) {
      frames.pop_back();
      if (!frames.empty()) {
        int pv = order[frames.back().pos];
        taken[img[pv]] = 0;
        img[pv] = -1;
      }
    }
  }
  return false;
}

bool is_vertex_transitive(const std::vector<uint64_t>& adj, int n) {
  for (int v = 1; v < n; ++v)
    if (!maps_to(adj, n, 0, v)) return false;
  return true;
}

// All automorphisms as vertex permutations, identity included; empty when the
// count exceeds cap (the canonicity check would cost more than it saves).
std::vector<std::array<uint8_t, 16>> all_automorphisms(const std::vector<uint64_t>& adj, int n,
                                                       size_t cap) {
  std::vector<std::array<uint8_t, 16>> out;
  if (n > 16) return out;
  std::array<uint8_t, 16> img{};
  uint64_t taken = 0;
  bool overflow = false;
  // assign images in vertex order, prefix-consistent
  auto rec = [&](auto&& self, int v) -> void {
    if (overflow) return;
    if (v == n) {
      out.push_back(img);
      if (out.size() > cap) overflow = true;
      return;
    }
    for (int c = 0; c < n && !overflow; ++c) {
      if (taken & bit(c)) continue;
      bool ok = popcount(adj[v]) == popcount(adj[c]);
      for (int p = 0; ok && p < v; ++p)
        if (((adj[v] >> p) & 1) != ((adj[c] >> img[p]) & 1)) ok = false;
      if (!ok) continue;
      img[v] = static_cast<uint8_t>(c);
      taken |= bit(c);
      self(self, v + 1);
      taken &= ~bit(c);
    }
  };
  rec(rec, 0);
  if (overflow) return {};
  return out;
}

// One representative per host-automorphism orbit.
uint64_t orbit_reps(const std::vector<uint64_t>& adj, int n) {
  uint64_t reps = 0;
  std::vector<char> covered(n, 0);
  for (int v = 0; v < n; ++v) {
    if (covered[v]) continue;
    reps |= bit(v);
    for (int w = v + 1; w < n; ++w)
      if (!covered[w] && popcount(adj[v]) == popcount(adj[w]) && maps_to(adj, n, v, w))
        covered[w] = 1;
  }
  return reps;
}

struct MinorSearch {
  // host (reduced)
  int hn = 0;
  std::vector<uint64_t> hadj;
  std::vector<int> hdeg;
  std::vector<long long> cap_prefix;  // sum of s largest degrees
  // target
  int tn = 0;
  std::vector<uint64_t> tadj;
  std::vector<int> tdeg;
  std::vector<int> ord, posof, minsize;
  bool symmetric = false;
  // Twin classes: target vertices whose pairwise swaps are automorphisms.
  // Within a class the branch sets can be sorted by smallest host vertex.
  std::vector<uint64_t> twin_class;  // by target vertex: mask of classmates
  bool host_trifree = false;
  uint64_t host_reps = ~0ULL;             // host automorphism orbit representatives
  // Target-automorphism canonicity: the sequence of branch-set minimum host
  // vertices must be lex-minimal over the automorphism orbit of the
  // assignment. Keys are distinct, so comparing against gamma's image is
  // decided at gamma's first moved placement position j0: the constraint is
  // just keys[pi(j0)] >= keys[j0], checkable the moment both positions are
  // placed. Enabled only when the group is bigger than the twin classes
  // account for; the host orbit-representative restriction is then turned
  // off (the two canonical forms need not intersect).
  bool gamma_on = false;
  std::vector<std::vector<std::pair<uint8_t, uint8_t>>> gchk;  // per level: (j0, pi(j0))
  std::array<uint8_t, 16> keys{};  // per position: min host vertex of set
  long long host_edges = 0;
  int target_edges = 0;
  std::vector<std::vector<std::pair<int, int>>> tri_pairs;  // adjacent pairs in N_T(v)

  uint64_t allowed = 0;
  uint64_t used = 0;
  std::vector<uint64_t> bset, bnbr;  // by placement position
  // Parity constraints in a bipartite host: singleton branch sets inherit a
  // fixed side, so every odd target cycle needs a non-singleton set. The OCT
  // table (minimum vertex deletions making an induced target subgraph
  // bipartite) turns that into a spare-vertex lower bound.
  bool host_bip = false;
  std::vector<uint8_t> oct_table, bip_table;  // indexed by target-vertex mask
  int plain_minsize_mask = 0;                 // target vertices with minsize == 1
  int p1_mask = 0;                            // target vertices placed as singletons
  // static per-position tables
  std::vector<std::vector<std::pair<int, int>>> contact_tab;  // (pos, pending count)
  std::vector<uint64_t> unplaced_tab;
  std::vector<int> needsum_tab;
  std::vector<long long> reqedge_tab;
  // Connected groups of unplaced target vertices, per level: summed min
  // sizes plus the placement positions anchoring the group. The free-host
  // components change every node, the groups never do.
  struct GroupInfo {
    int need = 0;
    std::vector<uint8_t> anchors;  // positions of placed target neighbors
  };
  std::vector<std::vector<GroupInfo>> grp_tab;
  // scratch, preallocated once (prune/place never re-enter mid-run)
  std::vector<std::vector<uint64_t>> anchor_buf;  // per position
  std::vector<uint64_t> comp_buf;
  long long budget = 0, nodes = 0;
  bool found = false;

  uint64_t nbr_mask(uint64_t s) const {
    uint64_t m = 0, t = s;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      m |= hadj[v];
    }
    return m & ~s;
  }

  long long ext_capacity(uint64_t s) const {
    long long sum = 0;
    uint64_t t = s;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      sum += hdeg[v];
    }
    return sum - 2 * (popcount(s) - 1);
  }

  int min_branch_size(int degree) const {
    for (int s = 1; s <= hn; ++s)
      if (cap_prefix[s] - 2 * (s - 1) >= degree) return s;
    return hn + 1;  // infeasible
  }

  void tick() {
    if (++nodes > budget) fail(Errc::BudgetExceeded, "minor search exceeded " + std::to_string(budget) + " nodes");
  }

  bool prune(int i) {
    uint64_t free = allowed & ~used;
    // contact prune: each placed set needs enough free neighbors for its
    // unplaced target neighbors
    for (const auto& [j, pending] : contact_tab[i])
      if (popcount(bnbr[j] & free) < pending) return true;
    int extra = parity_extra(i, 0);
    if (extra < 0) return true;
    if (popcount(free) < needsum_tab[i] + extra) return true;
    // Edge budget: each unrealized target edge and each remaining internal
    // spanning-tree edge needs a distinct host edge with a free endpoint.
    {
      long long required = reqedge_tab[i] + extra;  // extras also need tree edges
      long long avail = 0, ff = 0;
      uint64_t reach = free | used;
      uint64_t fm = free;
      while (fm) {
        int x = std::countr_zero(fm);
        fm &= fm - 1;
        avail += popcount(hadj[x] & reach);
        ff += popcount(hadj[x] & free);
      }
      avail -= ff / 2;
      if (avail < required) return true;
    }
    // Component prune. Adjacent unplaced target vertices must land in the
    // same free component, so when the free graph splits, match the static
    // per-level groups against the components. When it does not split the
    // contact and size checks above already imply feasibility here: every
    // anchor is nonempty in `free` (contact pending >= 1) and the lone
    // component holds the full need sum.
    uint64_t c = free & (~free + 1), todo = c;
    while (todo) {
      int x = std::countr_zero(todo);
      todo &= todo - 1;
      uint64_t add = hadj[x] & free & ~c;
      c |= add;
      todo |= add;
    }
    if (c == free) return false;
    comp_buf.clear();
    comp_buf.push_back(c);
    uint64_t rest = free & ~c;
    while (rest) {
      c = rest & (~rest + 1);
      todo = c;
      while (todo) {
        int x = std::countr_zero(todo);
        todo &= todo - 1;
        uint64_t add = hadj[x] & rest & ~c;
        c |= add;
        todo |= add;
      }
      comp_buf.push_back(c);
      rest &= ~c;
    }
    const auto& groups = grp_tab[i];
    std::array<uint64_t, 64> cand;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      uint64_t cm = 0;
      for (size_t ci = 0; ci < comp_buf.size(); ++ci) {
        if (popcount(comp_buf[ci]) < groups[gi].need) continue;
        bool all = true;
        for (uint8_t p : groups[gi].anchors)
          if (!(bnbr[p] & comp_buf[ci])) {  // components are subsets of free
            all = false;
            break;
          }
        if (all) cm |= bit(static_cast<int>(ci));
      }
      if (!cm) return true;
      cand[gi] = cm;
    }
    // groups pinned to a single component must fit it together
    for (size_t ci = 0; ci < comp_buf.size(); ++ci) {
      int pinned = 0;
      for (size_t gi = 0; gi < groups.size(); ++gi)
        if (cand[gi] == bit(static_cast<int>(ci))) pinned += groups[gi].need;
      if (pinned > popcount(comp_buf[ci])) return true;
    }
    return false;
  }

  // Future non-singleton sets forced by parity: odd cycles among unplaced
  // vertices and placed singletons must each contain a future non-singleton.
  // Returns -1 when a placed-singleton odd cycle makes the state infeasible.
  int parity_extra(int i, int drop) const {
    if (!host_bip) return 0;
    if (!bip_table[p1_mask]) return -1;
    int unplaced = static_cast<int>(unplaced_tab[i]);
    int m = (p1_mask | unplaced) & ~drop;
    // hitting vertices with minsize >= 2 add no vertex beyond their minimum
    int absorbed = popcount(static_cast<uint64_t>(unplaced) & ~static_cast<uint64_t>(plain_minsize_mask));
    return std::max(0, oct_table[m] - absorbed);
  }

  bool place(int i) {
    if (i == tn) {
      found = true;
      return true;
    }
    if (prune(i)) return false;
    int v = ord[i];
    uint64_t free = allowed & ~used;
    std::vector<uint64_t>& anchors = anchor_buf[i];
    anchors.clear();
    uint64_t tm = tadj[v];
    while (tm) {
      int u = std::countr_zero(tm);
      tm &= tm - 1;
      if (posof[u] < i) anchors.push_back(bnbr[posof[u]] & free);
    }
    // twin rule: this branch set's smallest vertex must exceed that of every
    // classmate already placed
    uint64_t veto = 0;
    uint64_t cm = twin_class[v];
    while (cm) {
      int u = std::countr_zero(cm);
      cm &= cm - 1;
      if (posof[u] < i) {
        int lo = std::countr_zero(bset[posof[u]]);
        veto |= (bit(lo) << 1) - 1;  // everything <= lo
      }
    }
    // canonicity pairs: this set's minimum must exceed the key at j0, so no
    // vertex at or below it may enter the set at all
    if (gamma_on)
      for (auto [a, b] : gchk[i]) veto |= (bit(keys[a]) << 1) - 1, (void)b;
    uint64_t seeds;
    if (anchors.empty()) {
      seeds = free;
      // The very first set may start from one host vertex per automorphism
      // orbit: any model maps to one whose first set meets a representative.
      // Skipped seeds are not banned, so such sets stay reachable there.
      if (i == 0 && !symmetric) seeds &= host_reps;
    } else {
      seeds = anchors.front();
      for (uint64_t a : anchors) {
        if (!a) return false;
        if (popcount(a) < popcount(seeds)) seeds = a;
      }
    }
    seeds &= ~veto;
    int spare = popcount(free) - needsum_tab[i];
    // parity obligations of cycles avoiding v consume spare elsewhere
    int extra = parity_extra(i, static_cast<int>(bit(v)));
    if (extra < 0) return false;
    spare -= extra;
    if (spare < 0) return false;
    int max_size = minsize[v] + spare;

    bool root_symmetry = symmetric && i == 0;
    uint64_t banned = 0;
    uint64_t sm = seeds;
    while (sm) {
      int s = std::countr_zero(sm);
      sm &= sm - 1;
      uint64_t saved_allowed = allowed;
      if (root_symmetry) allowed &= ~(bit(s) - 1);  // s is the least used host vertex
      uint64_t unmet_ix = 0;
      for (size_t k = 0; k < anchors.size(); ++k)
        if (!(anchors[k] & bit(s))) unmet_ix |= 1ULL << k;
      if (grow(i, bit(s), banned, anchors, max_size, veto, hadj[s], hdeg[s], 1, unmet_ix))
        return true;
      allowed = saved_allowed;
      banned |= bit(s);
    }
    return false;
  }

  // surface = N(S) \ S, cap = ext_capacity(S), size = |S| and unmet_ix (bit
  // per anchor index not yet met) are maintained incrementally by the caller.
  bool grow(int i, uint64_t S, uint64_t banned, const std::vector<uint64_t>& anchors, int max_size,
            uint64_t veto, uint64_t surface, long long cap, int size, uint64_t unmet_ix) {
    tick();
    int v = ord[i];
    // anchors are the free neighborhoods of the placed neighbor sets, so
    // intersecting each anchor makes S adjacent to each of those sets
    bool acceptable = unmet_ix == 0 && cap >= tdeg[v];
    // In a triangle-free host, three pairwise-adjacent singleton branch sets
    // would span a host triangle.
    if (acceptable && host_trifree && size == 1) {
      for (auto [a, b] : tri_pairs[v]) {
        if (posof[a] < i && posof[b] < i && popcount(bset[posof[a]]) == 1 &&
            popcount(bset[posof[b]]) == 1) {
          acceptable = false;
          break;
        }
      }
    }
    if (acceptable && gamma_on) keys[i] = static_cast<uint8_t>(std::countr_zero(S));
    if (acceptable) {
      bset[i] = S;
      bnbr[i] = surface;
      used |= S;
      int saved_p1 = p1_mask;
      if (size == 1) p1_mask |= 1 << v;
      bool ok = place(i + 1);
      p1_mask = saved_p1;
      used &= ~S;
      if (ok) return true;
    }
    if (size >= max_size) return false;
    uint64_t free = allowed & ~used;
    uint64_t unmet = 0;
    {
      uint64_t ui = unmet_ix;
      while (ui) {
        unmet |= anchors[std::countr_zero(ui)];
        ui &= ui - 1;
      }
    }
    uint64_t ext = surface & free & ~banned & ~veto;
    while (ext) {
      int c = std::countr_zero(ext);
      ext &= ext - 1;
      // Domination: adding c is useful only if it exposes fresh surface or
      // itself satisfies an unmet anchor. A model routing through c rewires
      // to one without it, and the condition persists deeper, so banning is
      // sound.
      if (!(unmet & bit(c)) && (hadj[c] & free & ~surface & ~S) == 0) {
        banned |= bit(c);
        continue;
      }
      uint64_t ui = unmet_ix;
      {
        uint64_t scan = unmet_ix;
        while (scan) {
          int k = std::countr_zero(scan);
          scan &= scan - 1;
          if (anchors[k] & bit(c)) ui &= ~(1ULL << k);
        }
      }
      uint64_t nsurf = (surface | hadj[c]) & ~(S | bit(c));
      if (grow(i, S | bit(c), banned, anchors, max_size, veto, nsurf, cap + hdeg[c] - 2, size + 1,
               ui))
        return true;
      banned |= bit(c);
    }
    return false;
  }
};

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& g, const Graph& h, const MinorOptions& opt) {
  if (g.order() > 64) fail(Errc::SizeLimitExceeded, "host order > 64");
  if (h.order() > 64) fail(Errc::SizeLimitExceeded, "target order > 64");
  IndexedGraph it = index_graph(h);
  if (it.n == 0) return MinorWitness{};  // empty target is a minor of anything

  int tmin = it.n;
  for (const auto& nbrs : it.adj) tmin = std::min(tmin, static_cast<int>(nbrs.size()));
  IndexedGraph ig = index_graph(g);
  ReducedHost host = reduce_host(ig, tmin);

  if (host.n < it.n) return std::nullopt;
  int host_edges = 0;
  for (int v = 0; v < host.n; ++v) host_edges += popcount(host.adj[v]);
  host_edges /= 2;
  if (host_edges < h.size()) return std::nullopt;

  MinorSearch s;
  s.hn = host.n;
  s.hadj = host.adj;
  s.hdeg.resize(s.hn);
  for (int v = 0; v < s.hn; ++v) s.hdeg[v] = popcount(s.hadj[v]);
  std::vector<int> degs = s.hdeg;
  std::sort(degs.rbegin(), degs.rend());
  s.cap_prefix.assign(s.hn + 1, 0);
  for (int i = 0; i < s.hn; ++i) s.cap_prefix[i + 1] = s.cap_prefix[i] + degs[i];

  s.tn = it.n;
  s.tadj.assign(s.tn, 0);
  s.tdeg.assign(s.tn, 0);
  for (int v = 0; v < s.tn; ++v) {
    for (int w : it.adj[v]) s.tadj[v] |= bit(w);
    s.tdeg[v] = static_cast<int>(it.adj[v].size());
  }
  s.minsize.resize(s.tn);
  for (int v = 0; v < s.tn; ++v) {
    s.minsize[v] = s.min_branch_size(s.tdeg[v]);
    if (s.minsize[v] > s.hn) return std::nullopt;
  }
  {
    int total = std::accumulate(s.minsize.begin(), s.minsize.end(), 0);
    if (total > s.hn) return std::nullopt;
  }

  // placement order: max degree first, then most placed neighbors
  s.ord.clear();
  std::vector<char> placed(s.tn, 0);
  for (int step = 0; step < s.tn; ++step) {
    int best = -1, best_nb = -1, best_deg = -1;
    for (int v = 0; v < s.tn; ++v) {
      if (placed[v]) continue;
      int nb = 0;
      for (int u = 0; u < s.tn; ++u)
        if (placed[u] && ((s.tadj[v] >> u) & 1)) ++nb;
      if (nb > best_nb || (nb == best_nb && s.tdeg[v] > best_deg)) {
        best = v;
        best_nb = nb;
        best_deg = s.tdeg[v];
      }
    }
    placed[best] = 1;
    s.ord.push_back(best);
  }
  s.posof.assign(s.tn, 0);
  for (int i = 0; i < s.tn; ++i) s.posof[s.ord[i]] = i;

  // Group target vertices into classes in which every pair can be swapped by
  // an automorphism: N(u) - v == N(v) - u, pairwise within the class.
  s.twin_class.assign(s.tn, 0);
  auto twins = [&](int u, int v) {
    uint64_t off = ~(bit(u) | bit(v));
    return (s.tadj[u] & off) == (s.tadj[v] & off);
  };
  std::vector<uint64_t> classes;
  for (int v = 0; v < s.tn; ++v) {
    bool joined = false;
    for (auto& cls : classes) {
      bool all = true;
      uint64_t m = cls;
      while (m && all) {
        int u = std::countr_zero(m);
        m &= m - 1;
        all = twins(u, v);
      }
      if (all) {
        cls |= bit(v);
        joined = true;
        break;
      }
    }
    if (!joined) classes.push_back(bit(v));
  }
  for (uint64_t cls : classes) {
    uint64_t m = cls;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      s.twin_class[v] = cls & ~bit(v);
    }
  }

  s.symmetric = is_vertex_transitive(s.tadj, s.tn);
  // Full target-automorphism canonicity beats the twin ordering exactly when
  // the group is bigger than the product of twin-class factorials.
  if (s.tn <= 16) {
    auto auts = all_automorphisms(s.tadj, s.tn, 4096);
    long long twin_factor = 1;
    for (uint64_t cls : classes) {
      long long f = 1;
      for (int k = 2; k <= popcount(cls); ++k) f *= k;
      twin_factor *= f;
    }
    if (static_cast<long long>(auts.size()) > twin_factor) {
      s.gchk.assign(s.tn, {});
      std::vector<std::vector<char>> seen(s.tn, std::vector<char>(s.tn, 0));
      for (const auto& a : auts) {
        int j0 = -1, t0 = -1;
        for (int j = 0; j < s.tn; ++j) {
          int pj = s.posof[a[s.ord[j]]];
          if (pj != j) {
            j0 = j;
            t0 = pj;
            break;
          }
        }
        if (j0 < 0) continue;  // identity
        if (seen[j0][t0]) continue;
        seen[j0][t0] = 1;
        int level = std::max(j0, t0);
        s.gchk[level].push_back({static_cast<uint8_t>(j0), static_cast<uint8_t>(t0)});
        s.gamma_on = true;
      }
    }
  }
  if (!s.gamma_on && !s.symmetric && s.hn <= 32) s.host_reps = orbit_reps(s.hadj, s.hn);
  s.host_edges = host_edges;
  s.target_edges = h.size();
  s.host_trifree = true;
  for (int v = 0; v < s.hn && s.host_trifree; ++v) {
    uint64_t m = s.hadj[v] & ~(bit(v + 1) - 1);
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      if (s.hadj[v] & s.hadj[w]) {
        s.host_trifree = false;
        break;
      }
    }
  }
  s.tri_pairs.assign(s.tn, {});
  for (int v = 0; v < s.tn; ++v) {
    uint64_t am = s.tadj[v];
    while (am) {
      int a = std::countr_zero(am);
      am &= am - 1;
      uint64_t bm = s.tadj[v] & s.tadj[a] & ~(bit(a + 1) - 1);
      while (bm) {
        int b = std::countr_zero(bm);
        bm &= bm - 1;
        s.tri_pairs[v].push_back({a, b});
      }
    }
  }
  s.allowed = s.hn == 64 ? ~0ULL : (bit(s.hn) - 1);
  // Host bipartition check plus per-mask bipartite/OCT tables for the target.
  if (s.tn <= 14) {
    std::vector<int> side(s.hn, -1);
    s.host_bip = true;
    for (int r = 0; r < s.hn && s.host_bip; ++r) {
      if (side[r] >= 0) continue;
      side[r] = 0;
      std::vector<int> q{r};
      for (size_t hp = 0; hp < q.size() && s.host_bip; ++hp) {
        uint64_t m = s.hadj[q[hp]];
        while (m) {
          int w = std::countr_zero(m);
          m &= m - 1;
          if (side[w] < 0) {
            side[w] = 1 - side[q[hp]];
            q.push_back(w);
          } else if (side[w] == side[q[hp]]) {
            s.host_bip = false;
            break;
          }
        }
      }
    }
    if (s.host_bip) {
      int full = 1 << s.tn;
      s.bip_table.assign(full, 0);
      s.oct_table.assign(full, 0);
      for (int m = 0; m < full; ++m) {
        std::vector<int> col(s.tn, -1);
        bool bip = true;
        for (int r = 0; r < s.tn && bip; ++r) {
          if (!(m & (1 << r)) || col[r] >= 0) continue;
          col[r] = 0;
          std::vector<int> q{r};
          for (size_t hp = 0; hp < q.size() && bip; ++hp) {
            uint64_t nm = s.tadj[q[hp]] & static_cast<uint64_t>(m);
            while (nm) {
              int w = std::countr_zero(nm);
              nm &= nm - 1;
              if (col[w] < 0) {
                col[w] = 1 - col[q[hp]];
                q.push_back(w);
              } else if (col[w] == col[q[hp]]) {
                bip = false;
                break;
              }
            }
          }
        }
        s.bip_table[m] = bip;
        if (bip) {
          s.oct_table[m] = 0;
        } else {
          int best = s.tn;
          for (int v = 0; v < s.tn; ++v)
            if (m & (1 << v)) best = std::min(best, 1 + s.oct_table[m & ~(1 << v)]);
          s.oct_table[m] = static_cast<uint8_t>(best);
        }
      }
    }
  }
  s.plain_minsize_mask = 0;
  for (int v = 0; v < s.tn; ++v)
    if (s.minsize[v] == 1) s.plain_minsize_mask |= 1 << v;
  s.contact_tab.assign(s.tn + 1, {});
  s.unplaced_tab.assign(s.tn + 1, 0);
  s.needsum_tab.assign(s.tn + 1, 0);
  s.reqedge_tab.assign(s.tn + 1, 0);
  for (int i = 0; i <= s.tn; ++i) {
    uint64_t unplaced = 0;
    for (int j = i; j < s.tn; ++j) {
      unplaced |= bit(s.ord[j]);
      s.needsum_tab[i] += s.minsize[s.ord[j]];
      s.reqedge_tab[i] += s.minsize[s.ord[j]] - 1;
    }
    s.unplaced_tab[i] = unplaced;
    long long uu = 0, udeg = 0;
    uint64_t um = unplaced;
    while (um) {
      int w = std::countr_zero(um);
      um &= um - 1;
      udeg += s.tdeg[w];
      uu += popcount(s.tadj[w] & unplaced);
    }
    s.reqedge_tab[i] += udeg - uu / 2;
    for (int j = 0; j < i; ++j) {
      int pending = popcount(s.tadj[s.ord[j]] & unplaced);
      if (pending > 0) s.contact_tab[i].push_back({j, pending});
    }
  }
  s.grp_tab.assign(s.tn + 1, {});
  for (int i = 0; i <= s.tn; ++i) {
    uint64_t left = s.unplaced_tab[i];
    while (left) {
      uint64_t grp = bit(std::countr_zero(left));
      while (true) {
        uint64_t grown = grp, gm = grp;
        while (gm) {
          int w = std::countr_zero(gm);
          gm &= gm - 1;
          grown |= s.tadj[w] & s.unplaced_tab[i];
        }
        if (grown == grp) break;
        grp = grown;
      }
      left &= ~grp;
      MinorSearch::GroupInfo info;
      uint64_t anch = 0, gm = grp;
      while (gm) {
        int w = std::countr_zero(gm);
        gm &= gm - 1;
        info.need += s.minsize[w];
        uint64_t tm = s.tadj[w] & ~s.unplaced_tab[i];
        while (tm) {
          int u = std::countr_zero(tm);
          tm &= tm - 1;
          anch |= bit(s.posof[u]);
        }
      }
      while (anch) {
        info.anchors.push_back(static_cast<uint8_t>(std::countr_zero(anch)));
        anch &= anch - 1;
      }
      s.grp_tab[i].push_back(std::move(info));
    }
  }
  s.bset.assign(s.tn, 0);
  s.bnbr.assign(s.tn, 0);
  s.anchor_buf.assign(s.tn, {});
  for (auto& b : s.anchor_buf) b.reserve(64);
  s.comp_buf.reserve(64);
  s.budget = opt.budget;

  bool hit = s.place(0);
  if (std::getenv("FORGE_MINOR_STATS"))
    std::fprintf(stderr, "minor-stats: target=%d host=%d nodes=%lld gamma=%d found=%d\n", s.tn,
                 s.hn, s.nodes, s.gamma_on ? 1 : 0, hit ? 1 : 0);
  if (!hit) return std::nullopt;

  MinorWitness w;
  for (int i = 0; i < s.tn; ++i) {
    const Label& tl = it.labels[s.ord[i]];
    LabelSet branch;
    uint64_t reduced = s.bset[i];
    while (reduced) {
      int rv = std::countr_zero(reduced);
      reduced &= reduced - 1;
      uint64_t orig = host.rep[rv];
      while (orig) {
        int ov = std::countr_zero(orig);
        orig &= orig - 1;
        branch.insert(host.orig_labels[ov]);
      }
    }
    w.branch_sets[tl] = std::move(branch);
  }
  return w;
}

bool verify_witness(const Graph& g, const Graph& h, const MinorWitness& w) {
  if (static_cast<int>(w.branch_sets.size()) != h.order()) return false;
  LabelSet seen;
  for (const auto& [tv, branch] : w.branch_sets) {
    if (!h.has_vertex(tv)) return false;
    if (branch.empty()) return false;
    for (const auto& gv : branch) {
      if (!g.has_vertex(gv)) return false;
      if (!seen.insert(gv).second) return false;  // overlap
    }
    if (!is_connected(induced_subgraph(g, branch))) return false;
  }
  for (const auto& [x, y] : h.edges()) {
    const LabelSet& bx = w.branch_sets.at(x);
    const LabelSet& by = w.branch_sets.at(y);
    bool joined = false;
    for (const auto& u : bx) {
      for (const auto& v : g.neighbors(u))
        if (by.count(v)) {
          joined = true;
          break;
        }
      if (joined) break;
    }
    if (!joined) return false;
  }
  return true;
}

const std::vector<Graph>& petersen_family() {
  static const std::vector<Graph> family = petersen_closure();
  return family;
}

ExclusionReport excludes_petersen_family(const Graph& g, const MinorOptions& opt) {
  const auto& family = petersen_family();
  for (size_t id = 0; id < family.size(); ++id) {
    if (family[id].order() > g.order()) continue;
    std::optional<MinorWitness> w;
    try {
      w = has_minor(g, family[id], opt);
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded)
        fail(Errc::BudgetExceeded, "while testing Petersen-family member " + std::to_string(id));
      throw;
    }
    if (w) {
      ExclusionReport r;
      r.excluded = false;
      r.offending_member = static_cast<int>(id);
      r.witness = std::move(w);
      return r;
    }
  }
  ExclusionReport r;
  r.excluded = true;
  return r;
}

}  // namespace forge
