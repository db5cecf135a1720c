// The .dyg text format.  Grammar: '#' comment lines, `vertex <name>
// <order>` with order an integer >= 2 or `inf`, `edge <u> <v> <m>` with
// m an integer >= 2.  Duplicate declarations are errors.  Canonical form:
// header comments, then vertices sorted by name, then edges sorted by
// endpoint pair, single spaces, LF line endings.

#pragma once

#include <cctype>
#include <fstream>

#include "dyer/graph.hpp"

namespace dyer::io {

class ParseError : public Error {
public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
  int line;
};

struct DygDocument {
  std::vector<std::string> header;  // leading comment lines, verbatim
  DyerGraph graph;
};

namespace detail_dyg {

constexpr long kMaxLabel = 1000000;

inline bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline long parse_number(const std::string& token, int line,
                         const std::string& what) {
  if (token.empty() || token.size() > 7)
    throw ParseError(line, what + " out of range: " + token);
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, what + " is not a number: " + token);
  const long value = std::stol(token);
  if (value < 2 || value > kMaxLabel)
    throw ParseError(line, what + " must be between 2 and " +
                               std::to_string(kMaxLabel) + ": " + token);
  return value;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

}  // namespace detail_dyg

inline DygDocument parse_dyg_document(const std::string& text) {
  std::vector<std::string> header;
  std::vector<VertexDecl> vertices;
  std::vector<EdgeDecl> edges;
  bool in_header = true;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
      trimmed.erase(trimmed.begin());
    if (trimmed.empty()) continue;
    if (trimmed[0] == '#') {
      if (in_header) header.push_back(line);
      continue;
    }
    in_header = false;
    auto tokens = detail_dyg::split_ws(trimmed);
    if (tokens[0] == "vertex") {
      if (tokens.size() != 3)
        throw ParseError(lineno, "expected: vertex <name> <order>");
      if (!detail_dyg::valid_token(tokens[1]))
        throw ParseError(lineno, "bad vertex name: " + tokens[1]);
      VertexOrder f = tokens[2] == "inf"
                          ? VertexOrder::inf()
                          : VertexOrder(static_cast<std::uint32_t>(
                                detail_dyg::parse_number(tokens[2], lineno,
                                                         "vertex order")));
      vertices.emplace_back(tokens[1], f);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4)
        throw ParseError(lineno, "expected: edge <u> <v> <m>");
      for (int i : {1, 2})
        if (!detail_dyg::valid_token(tokens[i]))
          throw ParseError(lineno, "bad vertex name: " + tokens[i]);
      const long m = detail_dyg::parse_number(tokens[3], lineno, "edge label");
      edges.push_back({tokens[1], tokens[2], static_cast<int>(m)});
    } else {
      throw ParseError(lineno, "unknown directive: " + tokens[0]);
    }
  }

  auto outcome = validate_dyer(vertices, edges);
  if (!outcome.ok()) throw ValidationError(std::move(outcome.violations));
  return DygDocument{std::move(header), std::move(*outcome.graph)};
}

inline DyerGraph parse_dyg(const std::string& text) {
  return parse_dyg_document(text).graph;
}

inline std::string canonical_print(const DyerGraph& g) {
  std::ostringstream os;
  for (const auto& [name, f] : g.vertices())
    os << "vertex " << name << " " << f.str() << "\n";
  for (const auto& [key, m] : g.edges())
    os << "edge " << key.first << " " << key.second << " " << m << "\n";
  return os.str();
}

inline std::string canonical_print(const DygDocument& doc) {
  std::ostringstream os;
  for (const auto& line : doc.header) os << line << "\n";
  os << canonical_print(doc.graph);
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

inline DyerGraph load_dyg(const std::string& path) {
  return parse_dyg(read_file(path));
}

}  // namespace dyer::io
