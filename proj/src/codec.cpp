#include "forge/codec.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace forge {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail(Errc::OrderTooLarge, "graph6 short form supports order <= 62, got " + std::to_string(n));
  IndexedGraph ig = index_graph(g);
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int bit = 0;
  char cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = static_cast<char>(cur << 1);
      if ((ig.mask[i] >> j) & 1ULL) cur |= 1;
      if (++bit == 6) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 0;
        cur = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
  return out;
}

Graph graph6_decode(const std::string& s) {
  if (s.empty()) fail(Errc::MalformedInput, "empty graph6 string");
  size_t pos = 0;
  long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') fail(Errc::OrderTooLarge, "graph6 8-byte order form not supported");
    if (s.size() < 4) fail(Errc::MalformedInput, "truncated graph6 order at position 1");
    n = 0;
    for (int k = 1; k <= 3; ++k) {
      int c = static_cast<unsigned char>(s[k]) - 63;
      if (c < 0 || c > 63) fail(Errc::MalformedInput, "bad graph6 byte at position " + std::to_string(k));
      n = (n << 6) | c;
    }
    pos = 4;
  } else {
    n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || n > 62) fail(Errc::MalformedInput, "bad graph6 order byte at position 0");
    pos = 1;
  }
  if (n > 2048) fail(Errc::OrderTooLarge, "graph6 order " + std::to_string(n) + " beyond supported range");
  const long nbits = n * (n - 1) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() != pos + nbytes)
    fail(Errc::MalformedInput, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                                   std::to_string(nbytes));
  Graph g;
  std::vector<Label> labels;
  for (long i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    g.insert_vertex(labels.back());
  }
  long bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      size_t byte_idx = pos + static_cast<size_t>(bit / 6);
      int c = static_cast<unsigned char>(s[byte_idx]) - 63;
      if (c < 0 || c > 63) fail(Errc::MalformedInput, "bad graph6 byte at position " + std::to_string(byte_idx));
      if ((c >> (5 - bit % 6)) & 1) g.insert_edge(labels[i], labels[j]);
    }
  }
  // padding bits must be zero
  if (nbits % 6 != 0) {
    int c = static_cast<unsigned char>(s.back()) - 63;
    if (c & ((1 << (6 - nbits % 6)) - 1))
      fail(Errc::MalformedInput, "nonzero padding bits at position " + std::to_string(s.size() - 1));
  }
  return g;
}

static bool plain_label(const Label& l) {
  for (char c : l)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !l.empty() && !std::isdigit(static_cast<unsigned char>(l[0])) ? true : !l.empty();
}

static std::string dot_quote(const Label& l) {
  if (plain_label(l)) return l;
  std::string out = "\"";
  for (char c : l) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string dot_export(const Graph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (const auto& v : g.vertices()) os << "  " << dot_quote(v) << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << dot_quote(u) << " -- " << dot_quote(v) << ";\n";
  os << "}\n";
  return os.str();
}

static void json_string(std::ostringstream& os, const Label& l) {
  os << '"';
  for (char c : l) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

std::string json_export(const Graph& g) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  bool first = true;
  for (const auto& v : g.vertices()) {
    if (!first) os << ',';
    first = false;
    json_string(os, v);
  }
  os << "],\"edges\":[";
  first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << '[';
    json_string(os, u);
    os << ',';
    json_string(os, v);
    os << ']';
  }
  os << "]}";
  return os.str();
}

Graph parse_edge_list(const std::string& text) {
  Graph g;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;
    if (!g.has_vertex(u)) g.insert_vertex(u);
    if (!(ls >> v)) continue;
    if (ls >> extra) fail(Errc::MalformedInput, "line " + std::to_string(lineno) + ": more than two tokens");
    if (!g.has_vertex(v)) g.insert_vertex(v);
    if (u == v) fail(Errc::MalformedInput, "line " + std::to_string(lineno) + ": loop edge");
    if (g.has_edge(u, v)) fail(Errc::MalformedInput, "line " + std::to_string(lineno) + ": duplicate edge");
    g.insert_edge(u, v);
  }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::FileMissing, path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& data) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::FileMissing, "cannot write " + tmp);
    out << data;
  }
  std::filesystem::rename(tmp, path);
}

Graph load_graph_file(const std::string& path) {
  std::string text = read_file(path);
  auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".g6") {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return graph6_decode(line);
    }
    fail(Errc::MalformedInput, path + ": no graph6 line");
  }
  return parse_edge_list(text);
}

}  // namespace forge
