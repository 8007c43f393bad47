#include "forge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>

#include "forge/codec.hpp"
#include "forge/error.hpp"
#include "forge/family.hpp"
#include "forge/minor.hpp"
#include "forge/report.hpp"
#include "forge/verify.hpp"

namespace forge {

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty())
    out << text;
  else
    write_file_atomic(path, text);
}

int cmd_build(int order, bool saturated, const std::string& format, const std::string& out_path,
              std::ostream& out) {
  if (saturated) {
    if (!((order >= 10 && order <= 13) || (order >= 14 && order % 4 == 2)))
      fail(Errc::NotAvailable,
           "saturated order must be 10..13 or a milestone (14, 18, 22, ...)");
  } else if (order != 10 && order < 14) {
    fail(Errc::NotAvailable, "order must be 13 (with data) or ≥ 14");
  }
  Graph g = saturated ? generate_s(order) : generate_t(order);
  std::string text;
  if (format == "g6")
    text = graph6_encode(g) + "\n";
  else if (format == "dot")
    text = dot_export(g);
  else if (format == "json")
    text = json_export(g);
  else
    fail(Errc::MalformedInput, "unknown format '" + format + "'");
  emit(out, text, out_path);
  return kPass;
}

int cmd_verify(int order, const std::string& in_path, bool direct, bool as_json, long long budget,
               std::ostream& out) {
  MinorOptions opt;
  if (budget > 0) opt.budget = budget;

  VerificationReport rep;
  Graph g;
  if (order == 13) {
    if (in_path.empty()) {
      rep.order = 13;
      rep.role = "Q13,3";
      rep.checks.push_back({"q13-data", CheckStatus::Skipped, "no adjacency data supplied"});
      out << report_to_text(rep);
      return kPass;
    }
    rep = verify_q13(in_path);
    g = load_graph_file(in_path);
  } else if (order > 0) {
    rep = verify_member(order, direct, opt);
    g = generate_t(order);
  } else {
    g = load_graph_file(in_path);
    rep.order = g.order();
    rep.role = "input";
    rep.checks.push_back({"triangle-free",
                          is_triangle_free(g) ? CheckStatus::Pass : CheckStatus::Fail, ""});
    rep.checks.push_back({"4-connected",
                          vertex_connectivity_at_least(g, 4).ok ? CheckStatus::Pass
                                                                : CheckStatus::Fail,
                          ""});
    if (direct) {
      auto ex = excludes_petersen_family(g, opt);
      rep.checks.push_back({"petersen-excluded",
                            ex.excluded ? CheckStatus::Pass : CheckStatus::Fail,
                            ex.excluded || !ex.offending_member
                                ? ""
                                : "family member " + std::to_string(*ex.offending_member)});
    } else {
      rep.checks.push_back({"petersen-excluded", CheckStatus::Skipped, "pass --direct-minor"});
    }
  }
  out << (as_json ? report_to_json(rep, g) : report_to_text(rep));
  return rep.all_passed() ? kPass : kPropertyFailed;
}

int cmd_petersen(const std::string& dir, std::ostream& out) {
  const auto& fam = petersen_family();
  for (size_t i = 0; i < fam.size(); ++i) {
    std::string code = graph6_encode(fam[i]) + "\n";
    if (dir.empty())
      out << code;
    else
      write_file_atomic(dir + "/p" + std::to_string(i) + ".g6", code);
  }
  return kPass;
}

int cmd_minor(const std::string& host_path, const std::string& target_path, bool petersen,
              long long budget, std::ostream& out) {
  MinorOptions opt;
  if (budget > 0) opt.budget = budget;
  Graph host = load_graph_file(host_path);
  if (petersen) {
    auto ex = excludes_petersen_family(host, opt);
    if (ex.excluded) {
      out << "excluded: no Petersen-family minor\n";
      return kPass;
    }
    out << "family member " << *ex.offending_member << " found as a minor\n";
    if (ex.witness) out << witness_to_json(*ex.witness);
    return kPropertyFailed;
  }
  Graph target = load_graph_file(target_path);
  auto w = has_minor(host, target, opt);
  if (!w) {
    out << "not a minor\n";
    return kPropertyFailed;
  }
  out << "minor found\n" << witness_to_json(*w);
  return kPass;
}

int cmd_certify(int order, const std::string& out_path, std::ostream& out) {
  NilCertificate cert = certify_nil(order);
  validate_certificate(cert);
  emit(out, certificate_to_json(cert), out_path);
  return kPass;
}

int cmd_catalog(int n_max, std::string dir, int direct_up_to, long long budget,
                std::ostream& out) {
  if (dir.empty()) {
    const char* env = std::getenv("FORGE_CATALOG_DIR");
    if (env) dir = env;
  }
  if (dir.empty())
    fail(Errc::MalformedInput, "no catalog directory: pass --dir or set FORGE_CATALOG_DIR");
  MinorOptions opt;
  if (budget > 0) opt.budget = budget;
  catalog_write(dir, n_max, direct_up_to, opt);
  for (int n = 14; n <= n_max; ++n)
    if (!reverify_report(read_file(dir + "/t" + std::to_string(n) + ".report.json"), opt)) {
      out << "catalog entry t" << n << " failed re-verification\n";
      return kPropertyFailed;
    }
  out << "catalog written to " << dir << " (orders 14.." << n_max << ")\n";
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph family generator and verifier"};
  app.require_subcommand(1);

  int order = 0;
  bool saturated = false;
  std::string format = "g6", out_path;
  auto* build = app.add_subcommand("build", "emit T_N (or S_N with --saturated)");
  build->add_option("--order", order)->required();
  build->add_flag("--saturated", saturated);
  build->add_option("--format", format)->check(CLI::IsMember({"g6", "dot", "json"}));
  build->add_option("--out", out_path);

  int v_order = 0;
  std::string v_in;
  bool v_direct = false, v_json = false;
  long long v_budget = 0;
  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--order", v_order);
  verify->add_option("--in", v_in);
  verify->add_flag("--direct-minor", v_direct);
  verify->add_flag("--json", v_json);
  verify->add_option("--budget", v_budget);

  std::string p_dir;
  auto* petersen = app.add_subcommand("petersen", "emit the 7 family members as graph6");
  petersen->add_option("--out", p_dir);

  std::string m_host, m_target;
  bool m_petersen = false;
  long long m_budget = 0;
  auto* minor = app.add_subcommand("minor", "minor containment query with witness");
  minor->add_option("--host", m_host)->required();
  minor->add_option("--target", m_target);
  minor->add_flag("--petersen", m_petersen);
  minor->add_option("--budget", m_budget);

  int c_order = 0;
  std::string c_out;
  auto* certify = app.add_subcommand("certify", "emit a clique-sum certificate as JSON");
  certify->add_option("--order", c_order)->required();
  certify->add_option("--out", c_out);

  int g_max = 0, g_direct = 0;
  std::string g_dir;
  long long g_budget = 0;
  auto* catalog = app.add_subcommand("catalog", "generate and persist catalog entries");
  catalog->add_option("--max", g_max)->required();
  catalog->add_option("--dir", g_dir);
  catalog->add_option("--direct-minor-up-to", g_direct);
  catalog->add_option("--budget", g_budget);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return cmd_build(order, saturated, format, out_path, out);
    if (*verify) {
      if (v_order == 0 && v_in.empty()) {
        err << "verify needs --order or --in\n";
        return kUsage;
      }
      return cmd_verify(v_order, v_in, v_direct, v_json, v_budget, out);
    }
    if (*petersen) return cmd_petersen(p_dir, out);
    if (*minor) {
      if (m_target.empty() == !m_petersen) {
        err << "minor needs exactly one of --target or --petersen\n";
        return kUsage;
      }
      return cmd_minor(m_host, m_target, m_petersen, m_budget, out);
    }
    if (*certify) return cmd_certify(c_order, c_out, out);
    if (*catalog) return cmd_catalog(g_max, g_dir, g_direct, g_budget, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case Errc::BudgetExceeded:
        return kBudget;
      case Errc::ValidationFailed:
      case Errc::CertificateInvalid:
        return kPropertyFailed;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace forge
