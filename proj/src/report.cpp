#include "forge/report.hpp"

#include <json.hpp>

#include "forge/codec.hpp"
#include "forge/error.hpp"
#include "forge/iso.hpp"

namespace forge {

namespace {

using nlohmann::json;

json graph_to_obj(const Graph& g) {
  json v = json::array();
  for (const auto& l : g.vertices()) v.push_back(l);
  json e = json::array();
  for (const auto& [a, b] : g.edges()) e.push_back(json::array({a, b}));
  return json{{"vertices", v}, {"edges", e}};
}

Graph graph_from_obj(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    fail(Errc::MalformedInput, "graph object needs vertices and edges");
  Graph g;
  for (const auto& v : j.at("vertices")) g.insert_vertex(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(Errc::MalformedInput, "edge must be a pair");
    g.insert_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return g;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
  }
}

CheckStatus status_from(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  fail(Errc::MalformedInput, "unknown check status '" + s + "'");
}

json witness_to_obj(const MinorWitness& w) {
  json bs = json::object();
  for (const auto& [tv, branch] : w.branch_sets) {
    json arr = json::array();
    for (const auto& gv : branch) arr.push_back(gv);
    bs[tv] = arr;
  }
  return json{{"branch_sets", bs}};
}

MinorWitness witness_from_obj(const json& j) {
  if (!j.is_object() || !j.contains("branch_sets"))
    fail(Errc::MalformedInput, "witness needs branch_sets");
  MinorWitness w;
  for (const auto& [tv, arr] : j.at("branch_sets").items()) {
    LabelSet s;
    for (const auto& gv : arr) s.insert(gv.get<std::string>());
    w.branch_sets[tv] = std::move(s);
  }
  return w;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::MalformedInput, "not valid JSON");
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, const Graph& g) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  json j{{"order", r.order},
         {"role", r.role},
         {"graph6", graph6_encode(g)},
         {"graph", graph_to_obj(g)},
         {"checks", checks},
         {"all_passed", r.all_passed()}};
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text, Graph* g_out) {
  json j = parse(text);
  if (!j.contains("order") || !j.contains("checks"))
    fail(Errc::MalformedInput, "report needs order and checks");
  VerificationReport r;
  r.order = j.at("order").get<int>();
  r.role = j.value("role", "");
  for (const auto& c : j.at("checks")) {
    PropertyCheck pc;
    pc.name = c.at("name").get<std::string>();
    pc.status = status_from(c.at("status").get<std::string>());
    pc.detail = c.value("detail", "");
    r.checks.push_back(std::move(pc));
  }
  if (g_out) {
    if (!j.contains("graph")) fail(Errc::MalformedInput, "report has no embedded graph");
    *g_out = graph_from_obj(j.at("graph"));
    if (j.contains("graph6") && graph6_encode(*g_out) != j.at("graph6").get<std::string>())
      fail(Errc::MalformedInput, "embedded graph6 does not match embedded graph");
  }
  return r;
}

std::string witness_to_json(const MinorWitness& w) { return witness_to_obj(w).dump(2) + "\n"; }

MinorWitness witness_from_json(const std::string& text) { return witness_from_obj(parse(text)); }

std::string certificate_to_json(const NilCertificate& c) {
  json leaves = json::array();
  for (const auto& l : c.tree.leaves) leaves.push_back(graph_to_obj(l));
  json joins = json::array();
  for (const auto& glue : c.tree.joins) {
    json arr = json::array();
    for (const auto& l : glue) arr.push_back(l);
    joins.push_back(arr);
  }
  json apex = json::array();
  for (const auto& a : c.leaf_apex) apex.push_back(a);
  json j{{"order", c.order},
         {"t_graph", graph_to_obj(c.t_graph)},
         {"composite", graph_to_obj(c.tree.composite)},
         {"leaves", leaves},
         {"joins", joins},
         {"leaf_apex", apex},
         {"spanning", c.spanning}};
  if (c.minor_link) j["minor_link"] = witness_to_obj(*c.minor_link);
  return j.dump(2) + "\n";
}

NilCertificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  for (const char* key : {"order", "t_graph", "composite", "leaves", "joins", "leaf_apex"})
    if (!j.contains(key)) fail(Errc::MalformedInput, std::string("certificate needs ") + key);
  NilCertificate c;
  c.order = j.at("order").get<int>();
  c.t_graph = graph_from_obj(j.at("t_graph"));
  c.tree.composite = graph_from_obj(j.at("composite"));
  for (const auto& l : j.at("leaves")) c.tree.leaves.push_back(graph_from_obj(l));
  for (const auto& glue : j.at("joins")) {
    std::vector<Label> ls;
    for (const auto& l : glue) ls.push_back(l.get<std::string>());
    c.tree.joins.push_back(std::move(ls));
  }
  for (const auto& a : j.at("leaf_apex")) c.leaf_apex.push_back(a.get<std::string>());
  c.spanning = j.value("spanning", false);
  if (j.contains("minor_link")) c.minor_link = witness_from_obj(j.at("minor_link"));
  return c;
}

std::string report_to_text(const VerificationReport& r) {
  std::string out = r.role + " (order " + std::to_string(r.order) + ")\n";
  for (const auto& c : r.checks) {
    std::string line = "  " + c.name + ": " + status_name(c.status);
    if (!c.detail.empty()) line += " (" + c.detail + ")";
    out += line + "\n";
  }
  out += r.all_passed() ? "  => all checks passed\n" : "  => FAILURES PRESENT\n";
  return out;
}

bool reverify_report(const std::string& json_text, const MinorOptions& opt) {
  Graph stored;
  VerificationReport r = report_from_json(json_text, &stored);
  if (r.role.rfind("T_", 0) != 0) return false;
  bool direct = false;
  for (const auto& c : r.checks)
    if (c.name == "petersen-excluded") direct = c.status == CheckStatus::Pass;
  if (!are_isomorphic(stored, generate_t(r.order))) return false;
  VerificationReport fresh = verify_member(r.order, direct, opt);
  if (fresh.checks.size() != r.checks.size()) return false;
  for (size_t i = 0; i < r.checks.size(); ++i)
    if (fresh.checks[i].name != r.checks[i].name || fresh.checks[i].status != r.checks[i].status)
      return false;
  return true;
}

std::string catalog_index_json(const std::vector<CatalogEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries)
    arr.push_back(json{{"order", e.order},
                       {"role", e.role},
                       {"graph6", e.graph6},
                       {"recipe_hash", e.recipe_hash},
                       {"certificate", e.has_certificate}});
  return json{{"entries", arr}}.dump(2) + "\n";
}

void catalog_write(const std::string& dir, int n_max, int direct_minor_up_to,
                   const MinorOptions& opt) {
  std::vector<CatalogEntry> entries;
  for (int n = 14; n <= n_max; ++n) {
    Graph t = generate_t(n);
    std::string prefix = dir + "/t" + std::to_string(n);
    write_file_atomic(prefix + ".g6", graph6_encode(t) + "\n");
    if (n % 4 == 2) {
      Graph s = generate_s(n);
      write_file_atomic(dir + "/s" + std::to_string(n) + ".g6", graph6_encode(s) + "\n");
    }
    VerificationReport rep = verify_member(n, n <= direct_minor_up_to, opt);
    write_file_atomic(prefix + ".report.json", report_to_json(rep, t));
    NilCertificate cert = certify_nil(n);
    write_file_atomic(prefix + ".cert.json", certificate_to_json(cert));
    CatalogEntry e;
    e.order = n;
    e.role = "T_" + std::to_string(n);
    e.graph6 = graph6_encode(t);
    e.recipe_hash = recipe_hash(recipe_for(n));
    e.has_certificate = true;
    entries.push_back(std::move(e));
  }
  write_file_atomic(dir + "/index.json", catalog_index_json(entries));
}

}  // namespace forge
