#pragma once
#include <map>
#include <optional>
#include <vector>

#include "forge/graph.hpp"

namespace forge {

// Branch-set assignment proving h is a minor of g.
struct MinorWitness {
  std::map<Label, LabelSet, NaturalLess> branch_sets;  // h vertex -> g vertices
};

struct MinorOptions {
  long long budget = 10'000'000'000;  // search-node budget; BudgetExceeded beyond
};

// Exact containment: a witness when h is a minor of g, nullopt for a definite
// no. Throws BudgetExceeded when the configured budget runs out.
std::optional<MinorWitness> has_minor(const Graph& g, const Graph& h,
                                      const MinorOptions& opt = {});

// Independent certificate check of the three branch-set invariants.
bool verify_witness(const Graph& g, const Graph& h, const MinorWitness& w);

// The seven Petersen-family members, cached, ordered by (order, canonical
// code); member 0 is K6.
const std::vector<Graph>& petersen_family();

struct ExclusionReport {
  bool excluded = false;
  std::optional<int> offending_member;  // id into petersen_family()
  std::optional<MinorWitness> witness;
};

ExclusionReport excludes_petersen_family(const Graph& g, const MinorOptions& opt = {});

}  // namespace forge
