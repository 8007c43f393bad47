#pragma once
#include <optional>
#include <string>
#include <vector>

#include "forge/graph.hpp"
#include "forge/minor.hpp"
#include "forge/transform.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Recipes: replayable construction sequences with all choices pinned.

struct BuildStep {
  enum class Kind { SaturateK4, Split, AddEdge };
  Kind kind = Kind::AddEdge;
  std::vector<Label> quad;  // SaturateK4
  Label u, v;               // AddEdge
  SplitSpec split;          // Split, partition pinned
};

struct BuildRecipe {
  int target_order = 0;
  std::vector<BuildStep> steps;
  std::vector<std::string> notes;  // provenance: prose-fixed vs verifier-chosen
};

Graph apply_step(const Graph& g, const BuildStep& s);
Graph replay(const Graph& start, const BuildRecipe& r);

std::string recipe_to_text(const BuildRecipe& r);
BuildRecipe recipe_from_text(const std::string& text);
std::string recipe_hash(const BuildRecipe& r);  // FNV-1a of the text form

// ---------------------------------------------------------------------------
// Seeds and generators.

Graph seed_t10();  // K5,5 minus a perfect matching on {5,6,7,8,a} / {1,2,3,4,b}
Graph seed_c();    // 9-vertex apex summand: saturate {5,6,7,8} in T10, drop b
Graph seed_t();    // 8-vertex middle summand of S18

// Validated loader for external Q13,3 data (edge list or graph6 by
// extension). Fails unless the graph is 13 vertices, triangle-free,
// 4-connected and Petersen-excluded.
Graph load_q13(const std::string& path);

BuildRecipe recipe_for(int n);  // n >= 14
Graph generate_t(int n);        // n == 10 or n >= 14
Graph generate_s(int n);        // n in {10,11,12,13} or n >= 14 with n = 2 mod 4

// Smallest milestone order 4m+6 whose chain covers T_n.
int supergraph_order(int n);

// ---------------------------------------------------------------------------
// Clique-sum nIL certificates.

struct CliqueSumTree {
  std::vector<Graph> leaves;               // chain order
  std::vector<std::vector<Label>> joins;   // shared K4 glue label lists
  Graph composite;                         // the certified S graph
};

struct NilCertificate {
  int order = 0;  // the certified T_n
  Graph t_graph;
  CliqueSumTree tree;
  std::vector<Label> leaf_apex;                // one apex vertex per leaf
  bool spanning = false;                       // T_n spans the composite
  std::optional<MinorWitness> minor_link;      // else: T_n as minor of composite
};

NilCertificate certify_nil(int n);
// Recomputes every clause; throws CertificateInvalid naming the failed one.
void validate_certificate(const NilCertificate& cert);

// ---------------------------------------------------------------------------
// Family-wide verification reports.

enum class CheckStatus { Pass, Fail, Skipped };

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerificationReport {
  int order = 0;
  std::string role;  // "T_n", "Q13,3", ...
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

VerificationReport verify_member(int n, bool direct_minor, const MinorOptions& opt = {});
VerificationReport verify_q13(const std::string& path);
std::vector<VerificationReport> verify_family(int n_max, int direct_minor_up_to,
                                              const MinorOptions& opt = {});

}  // namespace forge
