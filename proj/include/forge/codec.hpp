#pragma once
#include <string>

#include "forge/graph.hpp"

namespace forge {

// Standard graph6: order byte 63+n, then the upper triangle of the adjacency
// matrix in column order packed big-endian into 6-bit groups, each +63.
// Vertex labels are assigned 1..n in label order on encode and synthesized as
// "1".."n" on decode.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

// Deterministic exports; labels preserved, everything sorted.
std::string dot_export(const Graph& g);
std::string json_export(const Graph& g);

// "u v" per line; blank lines and '#' comments ignored. Isolated vertices may
// be declared on a line of their own.
Graph parse_edge_list(const std::string& text);

// Dispatch on extension: .g6 -> graph6 (first non-blank line), else edge list.
Graph load_graph_file(const std::string& path);

std::string read_file(const std::string& path);               // FileMissing on error
void write_file_atomic(const std::string& path, const std::string& data);

}  // namespace forge
