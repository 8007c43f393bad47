#pragma once
#include <optional>
#include <string>

#include "forge/family.hpp"
#include "forge/minor.hpp"

namespace forge {

// JSON serialization for evidence artifacts. Every file embeds the graphs it
// talks about, so a stored report or certificate can be re-verified without
// the generator. All output is deterministic: object keys and arrays are
// sorted.

std::string report_to_json(const VerificationReport& r, const Graph& g);
std::string certificate_to_json(const NilCertificate& c);
std::string witness_to_json(const MinorWitness& w);

// Parsers re-validate structure and throw MalformedInput with a description.
VerificationReport report_from_json(const std::string& text, Graph* g_out = nullptr);
NilCertificate certificate_from_json(const std::string& text);
MinorWitness witness_from_json(const std::string& text);

// Human-readable one-line-per-check rendering for terminal output.
std::string report_to_text(const VerificationReport& r);

// Re-runs every check of a stored report against the embedded graph; true
// when the stored statuses are reproduced.
bool reverify_report(const std::string& json_text, const MinorOptions& opt = {});

struct CatalogEntry {
  int order = 0;
  std::string role;         // "T_n", "S_n", ...
  std::string graph6;
  std::string recipe_hash;
  bool has_certificate = false;
};

// Catalog persistence: <dir>/t<N>.g6, s<N>.g6, t<N>.report.json,
// t<N>.cert.json and index.json (entries keyed "t<N>", sorted).
void catalog_write(const std::string& dir, int n_max, int direct_minor_up_to,
                   const MinorOptions& opt = {});
std::string catalog_index_json(const std::vector<CatalogEntry>& entries);

}  // namespace forge
