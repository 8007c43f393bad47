#pragma once
#include <map>
#include <optional>
#include <string>

#include "forge/graph.hpp"

namespace forge {

// Canonical labeling by equitable refinement plus individualization
// backtracking. Intended for graphs of order <= 64.
struct CanonicalForm {
  std::string code;  // "<n>:" + upper-triangle adjacency bits in canonical order
  std::map<Label, int, NaturalLess> position;  // label -> canonical index
};

CanonicalForm canonical_form(const Graph& g);
std::string canonical_code(const Graph& g);

using Isomorphism = std::map<Label, Label, NaturalLess>;

// Edge-preserving bijection g -> h when one exists.
std::optional<Isomorphism> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

// Independent witness check: m is a bijection and maps edges onto edges.
bool check_isomorphism(const Graph& g, const Graph& h, const Isomorphism& m);

}  // namespace forge
