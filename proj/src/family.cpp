#include "forge/family.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "forge/codec.hpp"
#include "forge/iso.hpp"
#include "forge/verify.hpp"

namespace forge {
namespace {

Label L(int i) { return std::to_string(i); }

std::vector<Label> quad_labels(int k) { return {L(4 * k + 1), L(4 * k + 2), L(4 * k + 3), L(4 * k + 4)}; }

Graph saturate_quad(Graph g, const std::vector<Label>& q) {
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = i + 1; j < q.size(); ++j)
      if (!g.has_edge(q[i], q[j])) g.insert_edge(q[i], q[j]);
  return g;
}

// S_{4m+6} from T_{4m+6}: complete every interior 4-set {4k+1..4k+4}.
Graph saturate_interior(const Graph& t, int m) {
  Graph s = t;
  for (int k = 2; k <= m; ++k) s = saturate_quad(std::move(s), quad_labels(k));
  return s;
}

LabelSet to_set(const std::vector<Label>& v) { return LabelSet(v.begin(), v.end()); }

}  // namespace

// ---------------------------------------------------------------------------
// Recipe replay and serialization.

Graph apply_step(const Graph& g, const BuildStep& s) {
  switch (s.kind) {
    case BuildStep::Kind::SaturateK4: {
      if (s.quad.size() != 4) fail(Errc::LengthMismatch, "saturate step needs 4 labels");
      for (const auto& v : s.quad)
        if (!g.has_vertex(v)) fail(Errc::UnknownVertex, "saturate label " + v);
      return saturate_quad(g, s.quad);
    }
    case BuildStep::Kind::Split:
      return vertex_split(g, s.split);
    case BuildStep::Kind::AddEdge:
      return add_edge(g, s.u, s.v);
  }
  fail(Errc::MalformedInput, "unknown step kind");
}

Graph replay(const Graph& start, const BuildRecipe& r) {
  Graph g = start;
  for (const auto& s : r.steps) g = apply_step(g, s);
  if (r.target_order != 0 && g.order() != r.target_order)
    fail(Errc::ValidationFailed, "replay reached order " + std::to_string(g.order()) +
                                     ", recipe targets " + std::to_string(r.target_order));
  return g;
}

std::string recipe_to_text(const BuildRecipe& r) {
  std::ostringstream out;
  out << "forge-recipe v1\n";
  out << "target " << r.target_order << "\n";
  for (const auto& n : r.notes) out << "note " << n << "\n";
  for (const auto& s : r.steps) {
    switch (s.kind) {
      case BuildStep::Kind::SaturateK4:
        out << "saturate";
        for (const auto& v : s.quad) out << ' ' << v;
        out << "\n";
        break;
      case BuildStep::Kind::AddEdge:
        out << "add " << s.u << ' ' << s.v << "\n";
        break;
      case BuildStep::Kind::Split:
        out << "split " << s.split.target << " -> " << s.split.new_label << " keep";
        for (const auto& v : s.split.part_a) out << ' ' << v;
        out << " move";
        for (const auto& v : s.split.part_b) out << ' ' << v;
        out << "\n";
        break;
    }
  }
  return out.str();
}

BuildRecipe recipe_from_text(const std::string& text) {
  BuildRecipe r;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  auto bad = [&](const std::string& msg) {
    fail(Errc::MalformedInput, "recipe line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (!saw_header) {
      std::string ver;
      ls >> ver;
      if (kw != "forge-recipe" || ver != "v1") bad("expected 'forge-recipe v1' header");
      saw_header = true;
      continue;
    }
    if (kw == "target") {
      if (!(ls >> r.target_order)) bad("target needs an integer");
    } else if (kw == "note") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      r.notes.push_back(rest);
    } else if (kw == "saturate") {
      BuildStep s;
      s.kind = BuildStep::Kind::SaturateK4;
      Label v;
      while (ls >> v) s.quad.push_back(v);
      if (s.quad.size() != 4) bad("saturate needs exactly 4 labels");
      r.steps.push_back(std::move(s));
    } else if (kw == "add") {
      BuildStep s;
      s.kind = BuildStep::Kind::AddEdge;
      if (!(ls >> s.u >> s.v)) bad("add needs two labels");
      std::string extra;
      if (ls >> extra) bad("trailing token '" + extra + "'");
      r.steps.push_back(std::move(s));
    } else if (kw == "split") {
      BuildStep s;
      s.kind = BuildStep::Kind::Split;
      std::string arrow, kw2;
      if (!(ls >> s.split.target >> arrow >> s.split.new_label >> kw2) || arrow != "->" ||
          kw2 != "keep")
        bad("split syntax: split T -> N keep ... move ...");
      Label tok;
      bool moving = false;
      while (ls >> tok) {
        if (tok == "move") {
          if (moving) bad("duplicate 'move'");
          moving = true;
        } else {
          (moving ? s.split.part_b : s.split.part_a).insert(tok);
        }
      }
      if (!moving) bad("split is missing 'move'");
      r.steps.push_back(std::move(s));
    } else {
      bad("unknown keyword '" + kw + "'");
    }
  }
  if (!saw_header) fail(Errc::MalformedInput, "recipe is missing its header");
  return r;
}

std::string recipe_hash(const BuildRecipe& r) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : recipe_to_text(r)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Seeds.

Graph seed_t10() {
  Graph g;
  const std::vector<Label> top = {"5", "6", "7", "8", "a"};
  const std::vector<Label> bot = {"1", "2", "3", "4", "b"};
  for (const auto& v : top) g.insert_vertex(v);
  for (const auto& v : bot) g.insert_vertex(v);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      if (i != j) g.insert_edge(top[i], bot[j]);  // i == j is the removed matching
  return g;
}

Graph seed_c() {
  Graph s10 = saturate_quad(seed_t10(), {"5", "6", "7", "8"});
  return delete_vertex(s10, "b");
}

// ---------------------------------------------------------------------------
// Chain search: one block of four splittings per milestone, partitions chosen
// lexicographically least subject to the milestone gate.

namespace {

struct StepPlan {
  BuildStep step;
  bool open = false;   // split partition pending
  int min_move = 3;    // lower bound on the moved part
};

BuildStep sat_step(std::vector<Label> q) {
  BuildStep s;
  s.kind = BuildStep::Kind::SaturateK4;
  s.quad = std::move(q);
  return s;
}

BuildStep add_step(Label u, Label v) {
  BuildStep s;
  s.kind = BuildStep::Kind::AddEdge;
  s.u = std::move(u);
  s.v = std::move(v);
  return s;
}

StepPlan split_plan(Label target, Label nl, int min_move = 3) {
  StepPlan p;
  p.step.kind = BuildStep::Kind::Split;
  p.step.split.target = std::move(target);
  p.step.split.new_label = std::move(nl);
  p.open = true;
  p.min_move = min_move;
  return p;
}

StepPlan fixed(BuildStep s) {
  StepPlan p;
  p.step = std::move(s);
  return p;
}

// Milestone 4m+6 is built from milestone 4m+2 by splitting the previous
// block's four fresh vertices. The first block starts from T10 and carries
// the published intermediate edge additions; blocks from m >= 4 interleave
// the four template additions among the frontier vertices.
std::vector<StepPlan> block_plan(int m) {
  std::vector<StepPlan> plan;
  if (m == 2) {
    plan.push_back(fixed(sat_step({"5", "6", "7", "8"})));
    // The fresh vertices must come out at degree 6 (they are the next split
    // targets); each pending addition below contributes one of those edges.
    plan.push_back(split_plan("8", "9", 4));
    plan.push_back(fixed(add_step("6", "9")));
    plan.push_back(split_plan("5", "10", 4));
    plan.push_back(fixed(add_step("7", "10")));
    plan.push_back(split_plan("6", "11", 5));
    plan.push_back(split_plan("7", "12", 5));
  } else if (m == 3) {
    for (int i = 1; i <= 4; ++i) plan.push_back(split_plan(L(8 + i), L(12 + i)));
  } else {
    const Label f1 = L(4 * m - 3), f2 = L(4 * m - 2), f3 = L(4 * m - 1), f4 = L(4 * m);
    const Label g1 = L(4 * m + 1), g2 = L(4 * m + 2), g3 = L(4 * m + 3), g4 = L(4 * m + 4);
    plan.push_back(fixed(add_step(f1, f2)));
    plan.push_back(fixed(add_step(f1, f4)));
    plan.push_back(split_plan(f1, g1));
    plan.push_back(fixed(add_step(f2, f3)));
    plan.push_back(split_plan(f2, g2));
    plan.push_back(fixed(add_step(f3, f4)));
    plan.push_back(split_plan(f3, g3));
    plan.push_back(split_plan(f4, g4));
  }
  return plan;
}

struct Decomp {
  std::vector<LabelSet> bags;                 // chain order, left end first
  std::vector<std::vector<Label>> glues;      // Q_2 .. Q_m
};

// Recover the path-of-bags structure of a saturated milestone graph.
std::optional<Decomp> decompose_sum(const Graph& s, int m, std::string* why) {
  auto reject = [&](const std::string& msg) -> std::optional<Decomp> {
    if (why) *why = msg;
    return std::nullopt;
  };
  Decomp d;
  LabelSet interior;
  for (int k = 2; k <= m; ++k) {
    auto q = quad_labels(k);
    for (const auto& v : q) {
      if (!s.has_vertex(v)) return reject("glue vertex " + v + " missing");
      interior.insert(v);
    }
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j)
        if (!s.has_edge(q[i], q[j])) return reject("glue " + std::to_string(k) + " is not complete");
    d.glues.push_back(q);
  }
  LabelSet rest;
  for (const auto& v : s.vertices())
    if (!interior.count(v)) rest.insert(v);
  // components of the graph minus all glue sets
  std::vector<LabelSet> comps;
  LabelSet seen;
  for (const auto& v : rest) {
    if (seen.count(v)) continue;
    LabelSet comp;
    std::vector<Label> stack = {v};
    seen.insert(v);
    while (!stack.empty()) {
      Label x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (const auto& y : s.neighbors(x))
        if (rest.count(y) && !seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
    }
    comps.push_back(std::move(comp));
  }
  if (comps.size() != 2) return reject("expected 2 end components, found " + std::to_string(comps.size()));
  for (const auto& c : comps)
    if (c.size() != 5) return reject("end component has size " + std::to_string(c.size()));
  // attachment: which glue sets each component touches
  auto attach = [&](const LabelSet& comp) {
    std::set<int> ks;
    for (const auto& v : comp)
      for (const auto& y : s.neighbors(v))
        for (int k = 2; k <= m; ++k)
          for (const auto& q : quad_labels(k))
            if (q == y) ks.insert(k);
    return ks;
  };
  auto a0 = attach(comps[0]), a1 = attach(comps[1]);
  LabelSet left, right;
  if (m == 2) {
    if (a0 != std::set<int>{2} || a1 != std::set<int>{2})
      return reject("end components attach beyond the single glue");
    left = comps[0];  // components are discovered in label order
    right = comps[1];
  } else {
    if (a0 == std::set<int>{2} && a1 == std::set<int>{m}) {
      left = comps[0];
      right = comps[1];
    } else if (a0 == std::set<int>{m} && a1 == std::set<int>{2}) {
      left = comps[1];
      right = comps[0];
    } else {
      return reject("end components attach to interior glue sets");
    }
  }
  LabelSet bag = left;
  for (const auto& v : d.glues.front()) bag.insert(v);
  d.bags.push_back(bag);
  for (int k = 2; k < m; ++k) {
    LabelSet mid;
    for (const auto& v : quad_labels(k)) mid.insert(v);
    for (const auto& v : quad_labels(k + 1)) mid.insert(v);
    d.bags.push_back(mid);
  }
  bag = right;
  for (const auto& v : d.glues.back()) bag.insert(v);
  d.bags.push_back(bag);
  // every edge must live inside one bag
  for (const auto& [u, v] : s.edges()) {
    bool covered = false;
    for (const auto& b : d.bags)
      if (b.count(u) && b.count(v)) {
        covered = true;
        break;
      }
    if (!covered) return reject("edge " + u + "-" + v + " crosses the decomposition");
  }
  return d;
}

bool induces_c4(const Graph& g, const std::vector<Label>& q) {
  Graph h = induced_subgraph(g, to_set(q));
  if (h.order() != 4 || h.size() != 4 || !is_connected(h)) return false;
  for (const auto& v : h.vertices())
    if (h.degree(v) != 2) return false;
  return true;
}

struct BlockSearch {
  int m = 0;
  std::vector<StepPlan> plan;
  const Graph* c_ref = nullptr;
  const Graph* t_ref = nullptr;  // middle-bag reference, null for m <= 3
  std::set<Edge> allowed_fresh;  // permitted adjacencies among fresh vertices
  std::vector<Label> fresh;      // fresh vertices created so far
  std::vector<BuildStep> chosen;
  std::vector<std::pair<int, Graph>> snaps;

  bool run(const Graph& g, size_t idx);
  bool pruned(const Graph& g, size_t idx) const;
  bool gate(const Graph& t) const;
};

bool BlockSearch::pruned(const Graph& g, size_t idx) const {
  const StepPlan& sp = plan[idx];
  if (sp.step.kind == BuildStep::Kind::Split) {
    const Label& nl = sp.step.split.new_label;
    for (const auto& x : fresh) {
      if (x == nl) continue;
      if (g.has_edge(x, nl) && !allowed_fresh.count(make_edge(x, nl))) return true;
    }
  }
  // A triangle none of whose vertices will be split again survives to the
  // milestone, which must be triangle-free.
  LabelSet future;
  for (size_t j = idx + 1; j < plan.size(); ++j)
    if (plan[j].step.kind == BuildStep::Kind::Split) future.insert(plan[j].step.split.target);
  LabelSet keep;
  for (const auto& v : g.vertices())
    if (!future.count(v)) keep.insert(v);
  return find_triangle(induced_subgraph(g, keep)).has_value();
}

bool BlockSearch::gate(const Graph& t) const {
  const int M = 4 * m + 6;
  if (t.order() != M) return false;
  for (int k = 3; k <= m - 1; ++k)
    if (!induces_c4(t, quad_labels(k))) return false;
  // {9..12} stays independent: the first saturation must add a full K4 so the
  // end bags can close up to C.
  if (induced_subgraph(t, to_set(quad_labels(2))).size() != 0) return false;
  if (m == 2) {
    for (const auto& v : quad_labels(2))
      if (t.degree(v) < 6) return false;
  } else {
    Graph fr = induced_subgraph(t, to_set(quad_labels(m)));
    for (const auto& [u, v] : fr.edges())
      if (!allowed_fresh.count(make_edge(u, v))) return false;
  }
  if (find_triangle(t)) return false;
  Graph s = saturate_interior(t, m);
  auto dec = decompose_sum(s, m, nullptr);
  if (!dec) return false;
  if (!are_isomorphic(induced_subgraph(s, dec->bags.front()), *c_ref)) return false;
  if (!are_isomorphic(induced_subgraph(s, dec->bags.back()), *c_ref)) return false;
  for (size_t i = 1; i + 1 < dec->bags.size(); ++i) {
    Graph mid = induced_subgraph(s, dec->bags[i]);
    if (t_ref) {
      if (!are_isomorphic(mid, *t_ref)) return false;
    } else {
      // m == 3 pins the middle summand: it must be connected and apex at
      // every vertex so the certificates downstream go through.
      if (!is_connected(mid)) return false;
      for (const auto& v : mid.vertices())
        if (!is_planar(delete_vertex(mid, v))) return false;
    }
  }
  return vertex_connectivity_at_least(t, 4).ok;
}

std::vector<std::pair<LabelSet, LabelSet>> split_choices(const Graph& g, const Label& target,
                                                         int min_move) {
  std::vector<Label> nb(g.neighbors(target).begin(), g.neighbors(target).end());
  const int d = static_cast<int>(nb.size());
  std::vector<std::vector<Label>> keeps;
  if (d <= 20) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      int k = __builtin_popcount(mask);
      if (k < 3 || d - k < std::max(3, min_move)) continue;
      std::vector<Label> keep;
      for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) keep.push_back(nb[i]);
      keeps.push_back(std::move(keep));
    }
  }
  std::sort(keeps.begin(), keeps.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), natural_less);
  });
  std::vector<std::pair<LabelSet, LabelSet>> out;
  out.reserve(keeps.size());
  for (const auto& keep : keeps) {
    LabelSet a(keep.begin(), keep.end()), b;
    for (const auto& v : nb)
      if (!a.count(v)) b.insert(v);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

bool BlockSearch::run(const Graph& g, size_t idx) {
  if (idx == plan.size()) return gate(g);
  const StepPlan& sp = plan[idx];
  if (!sp.open) {
    Graph next;
    try {
      next = apply_step(g, sp.step);
    } catch (const Error&) {
      return false;
    }
    chosen.push_back(sp.step);
    snaps.emplace_back(next.order(), next);
    if (!pruned(next, idx) && run(next, idx + 1)) return true;
    chosen.pop_back();
    snaps.pop_back();
    return false;
  }
  for (auto& [a, b] : split_choices(g, sp.step.split.target, sp.min_move)) {
    BuildStep s = sp.step;
    s.split.part_a = a;
    s.split.part_b = b;
    Graph next;
    try {
      next = vertex_split(g, s.split);
    } catch (const Error&) {
      continue;
    }
    chosen.push_back(s);
    snaps.emplace_back(next.order(), next);
    fresh.push_back(s.split.new_label);
    if (!pruned(next, idx) && run(next, idx + 1)) return true;
    fresh.pop_back();
    chosen.pop_back();
    snaps.pop_back();
  }
  return false;
}

struct Chain {
  int milestone = 0;
  std::vector<BuildStep> steps;
  std::map<int, Graph> t_at;       // first graph reaching each order >= 14
  std::map<int, Graph> s_mid;      // last graph at orders 11..13 (first block)
  std::map<int, size_t> steps_to;  // step count to first reach each order
};

Graph middle_summand(const Graph& t18) {
  Graph s18 = saturate_interior(t18, 3);
  LabelSet mid;
  for (int v = 9; v <= 16; ++v) mid.insert(L(v));
  return induced_subgraph(s18, mid);
}

const Chain& chain_to(int milestone) {
  static std::map<int, Chain> cache;
  auto it = cache.find(milestone);
  if (it != cache.end()) return it->second;

  const int m = (milestone - 6) / 4;
  Chain ch;
  Graph base;
  if (m == 2) {
    base = seed_t10();
  } else {
    const Chain& prev = chain_to(milestone - 4);
    ch = prev;
    base = prev.t_at.at(milestone - 4);
  }
  ch.milestone = milestone;

  static const Graph c_ref = seed_c();
  static Graph t_ref;  // pinned after the m == 3 block succeeds
  BlockSearch bs;
  bs.m = m;
  bs.plan = block_plan(m);
  bs.c_ref = &c_ref;
  bs.t_ref = m >= 4 ? &t_ref : nullptr;
  if (m >= 3) {
    bs.allowed_fresh.insert(make_edge(L(4 * m + 1), L(4 * m + 3)));
    bs.allowed_fresh.insert(make_edge(L(4 * m + 2), L(4 * m + 4)));
  }
  if (!bs.run(base, 0))
    fail(Errc::NoValidPartition,
         "no split partitions complete the block to order " + std::to_string(milestone));

  for (size_t i = 0; i < bs.chosen.size(); ++i) {
    ch.steps.push_back(bs.chosen[i]);
    const auto& [ord, g] = bs.snaps[i];
    if (ord >= 14 && !ch.t_at.count(ord)) {
      ch.t_at.emplace(ord, g);
      ch.steps_to[ord] = ch.steps.size();
    }
    if (ord >= 11 && ord <= 13) ch.s_mid.insert_or_assign(ord, g);
  }
  if (m == 3) t_ref = middle_summand(ch.t_at.at(18));
  return cache.emplace(milestone, std::move(ch)).first->second;
}

}  // namespace

Graph seed_t() { return middle_summand(chain_to(18).t_at.at(18)); }

int supergraph_order(int n) {
  if (n < 14) fail(Errc::NotAvailable, "family members start at order 14");
  const int m = std::max(2, (n - 6 + 3) / 4);
  return 4 * m + 6;
}

BuildRecipe recipe_for(int n) {
  if (n < 14) fail(Errc::RecipeUnavailable, "recipes cover orders 14 and up");
  const Chain& ch = chain_to(supergraph_order(n));
  BuildRecipe r;
  r.target_order = n;
  size_t cut = ch.steps_to.at(n);
  r.steps.assign(ch.steps.begin(), ch.steps.begin() + static_cast<long>(cut));
  r.notes.push_back("skeleton: published step order (targets, additions, saturation)");
  r.notes.push_back("split partitions: gated search, lexicographically least kept part");
  return r;
}

Graph generate_t(int n) {
  if (n == 10) return seed_t10();
  if (n == 13) fail(Errc::NotAvailable, "order 13 is external data; use load_q13");
  if (n < 14) fail(Errc::NotAvailable, "no family member of order " + std::to_string(n));
  return chain_to(supergraph_order(n)).t_at.at(n);
}

Graph generate_s(int n) {
  if (n == 10) return saturate_quad(seed_t10(), {"5", "6", "7", "8"});
  if (n >= 11 && n <= 13) return chain_to(14).s_mid.at(n);
  if (n >= 14 && n % 4 == 2) return saturate_interior(generate_t(n), (n - 6) / 4);
  fail(Errc::NotAvailable, "saturated graphs exist at 10..13 and milestone orders 4m+6");
}

// ---------------------------------------------------------------------------
// Certificates.

NilCertificate certify_nil(int n) {
  if (n < 14) fail(Errc::NotAvailable, "certificates start at order 14");
  const int M = supergraph_order(n);
  const int m = (M - 6) / 4;
  const Chain& ch = chain_to(M);
  NilCertificate cert;
  cert.order = n;
  cert.t_graph = ch.t_at.at(n);
  Graph s = saturate_interior(ch.t_at.at(M), m);
  std::string why;
  auto dec = decompose_sum(s, m, &why);
  if (!dec) fail(Errc::CertificateInvalid, "milestone decomposition: " + why);
  cert.tree.composite = s;
  cert.tree.joins = dec->glues;
  for (const auto& b : dec->bags) {
    Graph leaf = induced_subgraph(s, b);
    LabelSet apex = apex_vertices(leaf);
    if (apex.empty()) fail(Errc::CertificateInvalid, "leaf has no apex vertex");
    cert.leaf_apex.push_back(*apex.begin());
    cert.tree.leaves.push_back(std::move(leaf));
  }
  cert.spanning = (n == M);
  if (!cert.spanning) {
    // Later splits only subdivide branch sets: map every vertex back to the
    // T_n vertex it grew out of.
    std::map<Label, Label, NaturalLess> root;
    for (const auto& v : cert.t_graph.vertices()) root.emplace(v, v);
    for (size_t i = ch.steps_to.at(n); i < ch.steps.size(); ++i) {
      const BuildStep& st = ch.steps[i];
      if (st.kind == BuildStep::Kind::Split)
        root.emplace(st.split.new_label, root.at(st.split.target));
    }
    MinorWitness w;
    for (const auto& [v, rt] : root) w.branch_sets[rt].insert(v);
    cert.minor_link = std::move(w);
  }
  validate_certificate(cert);
  return cert;
}

void validate_certificate(const NilCertificate& cert) {
  auto bad = [](const std::string& msg) { fail(Errc::CertificateInvalid, msg); };
  const auto& tr = cert.tree;
  if (tr.leaves.empty() || tr.leaves.size() != tr.joins.size() + 1)
    bad("tree arity: leaves must be joins + 1");
  if (cert.leaf_apex.size() != tr.leaves.size()) bad("one apex vertex per leaf required");
  for (size_t i = 0; i < tr.leaves.size(); ++i) {
    const Graph& leaf = tr.leaves[i];
    if (!is_connected(leaf) || leaf.order() == 0) bad("leaf " + std::to_string(i) + " disconnected");
    const Label& a = cert.leaf_apex[i];
    if (!leaf.has_vertex(a)) bad("apex vertex " + a + " not in leaf " + std::to_string(i));
    if (!is_planar(delete_vertex(leaf, a)))
      bad("leaf " + std::to_string(i) + " minus " + a + " is not planar");
  }
  Graph acc = tr.leaves[0];
  for (size_t i = 0; i < tr.joins.size(); ++i) {
    const auto& glue = tr.joins[i];
    const Graph& leaf = tr.leaves[i + 1];
    if (glue.size() != 4) bad("join " + std::to_string(i) + " is not a 4-set");
    for (const auto& side : {std::cref(acc), std::cref(leaf)}) {
      const Graph& g = side.get();
      for (const auto& v : glue)
        if (!g.has_vertex(v)) bad("glue vertex " + v + " missing at join " + std::to_string(i));
      for (size_t x = 0; x < 4; ++x)
        for (size_t y = x + 1; y < 4; ++y)
          if (!g.has_edge(glue[x], glue[y])) bad("glue not complete at join " + std::to_string(i));
      Graph cut = g;
      for (const auto& v : glue) cut = delete_vertex(cut, v);
      if (cut.order() == 0 || !is_connected(cut))
        bad("glue is a cutset of a side at join " + std::to_string(i));
    }
    LabelSet glue_set = to_set(glue);
    for (const auto& v : leaf.vertices())
      if (acc.has_vertex(v) && !glue_set.count(v))
        bad("sides overlap beyond the glue at join " + std::to_string(i));
    acc = clique_sum(acc, leaf, CliqueSumSpec{glue, glue});
  }
  if (!(acc == tr.composite)) bad("folded sum differs from the composite");
  if (cert.t_graph.order() != cert.order) bad("certified order mismatch");
  if (cert.spanning) {
    if (!is_spanning_edge_subgraph(cert.t_graph, tr.composite))
      bad("graph does not span the composite");
  } else {
    if (!cert.minor_link) bad("non-spanning certificate is missing its minor witness");
    if (!verify_witness(tr.composite, cert.t_graph, *cert.minor_link))
      bad("minor witness fails verification");
  }
}

// ---------------------------------------------------------------------------
// Verification reports.

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

PropertyCheck mk(std::string name, CheckStatus st, std::string detail = {}) {
  return PropertyCheck{std::move(name), st, std::move(detail)};
}

void check_core(VerificationReport& rep, const Graph& g, int n) {
  rep.checks.push_back(
      mk("order", g.order() == n ? CheckStatus::Pass : CheckStatus::Fail,
         "order " + std::to_string(g.order())));
  int gi = girth(g);
  rep.checks.push_back(mk("triangle-free", gi >= 4 ? CheckStatus::Pass : CheckStatus::Fail,
                          gi == kInfiniteGirth ? "acyclic" : "girth " + std::to_string(gi)));
  auto conn = vertex_connectivity_at_least(g, 4);
  std::string detail;
  if (!conn.ok && conn.witness) {
    detail = "cut {";
    for (const auto& v : conn.witness->separator) detail += v + " ";
    detail += "} separates " + conn.witness->s + " from " + conn.witness->t;
  }
  rep.checks.push_back(mk("4-connected", conn.ok ? CheckStatus::Pass : CheckStatus::Fail, detail));
}

}  // namespace

VerificationReport verify_member(int n, bool direct_minor, const MinorOptions& opt) {
  VerificationReport rep;
  rep.order = n;
  rep.role = "T_" + std::to_string(n);
  Graph g = generate_t(n);
  check_core(rep, g, n);

  if (n >= 14 && n % 4 == 2) {
    const int m = (n - 6) / 4;
    bool ok = true;
    std::string which;
    for (int k = 3; k <= m - 1; ++k) {
      which += "{" + L(4 * k + 1) + ".." + L(4 * k + 4) + "} ";
      if (!induces_c4(g, quad_labels(k))) ok = false;
    }
    rep.checks.push_back(mk("interior-4-cycles", ok ? CheckStatus::Pass : CheckStatus::Fail,
                            which.empty() ? "no interior 4-sets at this order" : which));
  } else {
    rep.checks.push_back(mk("interior-4-cycles", CheckStatus::Skipped, "not a milestone order"));
  }

  if (n >= 14) {
    try {
      NilCertificate cert = certify_nil(n);
      validate_certificate(cert);
      rep.checks.push_back(mk("nil-certificate", CheckStatus::Pass,
                              std::to_string(cert.tree.leaves.size()) + " leaves, " +
                                  (cert.spanning ? "spanning" : "minor-linked")));
    } catch (const Error& e) {
      rep.checks.push_back(mk("nil-certificate", CheckStatus::Fail, e.what()));
    }
  } else {
    rep.checks.push_back(mk("nil-certificate", CheckStatus::Skipped, "below order 14"));
  }

  if (direct_minor || n == 10) {
    try {
      auto ex = excludes_petersen_family(g, opt);
      std::string detail;
      if (!ex.excluded && ex.offending_member)
        detail = "family member " + std::to_string(*ex.offending_member) + " found as a minor";
      rep.checks.push_back(
          mk("petersen-excluded", ex.excluded ? CheckStatus::Pass : CheckStatus::Fail, detail));
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded)
        rep.checks.push_back(mk("petersen-excluded", CheckStatus::Skipped,
                                "budget exceeded; certificate route retained"));
      else
        throw;
    }
  } else {
    rep.checks.push_back(mk("petersen-excluded", CheckStatus::Skipped, "certificate route"));
  }
  return rep;
}

Graph load_q13(const std::string& path) {
  Graph g = load_graph_file(path);
  if (g.order() != 13) fail(Errc::ValidationFailed, "expected order 13, got " + std::to_string(g.order()));
  if (!is_triangle_free(g)) fail(Errc::ValidationFailed, "graph has a triangle");
  if (!vertex_connectivity_at_least(g, 4).ok) fail(Errc::ValidationFailed, "graph is not 4-connected");
  if (!excludes_petersen_family(g).excluded)
    fail(Errc::ValidationFailed, "graph has a Petersen-family minor");
  return g;
}

VerificationReport verify_q13(const std::string& path) {
  VerificationReport rep;
  rep.order = 13;
  rep.role = "Q13,3";
  Graph g = load_graph_file(path);
  check_core(rep, g, 13);
  auto ex = excludes_petersen_family(g);
  rep.checks.push_back(mk("petersen-excluded", ex.excluded ? CheckStatus::Pass : CheckStatus::Fail,
                          ex.excluded ? "" : "family member " +
                                                 std::to_string(ex.offending_member.value_or(-1)) +
                                                 " found as a minor"));
  return rep;
}

std::vector<VerificationReport> verify_family(int n_max, int direct_minor_up_to,
                                              const MinorOptions& opt) {
  std::vector<VerificationReport> reps;
  for (int n = 14; n <= n_max; ++n) reps.push_back(verify_member(n, n <= direct_minor_up_to, opt));
  return reps;
}

}  // namespace forge
