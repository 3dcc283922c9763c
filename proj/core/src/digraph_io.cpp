#include <fstream>
#include <sstream>

#include "idio/digraph.hpp"

namespace idio {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(const Line& line, const std::string& tok) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(tok, &used);
  } catch (const std::exception&) {
    fail(line.number, "expected a non-negative integer, got '" + tok + "'");
  }
  if (used != tok.size() || tok.front() == '-' || tok.front() == '+')
    fail(line.number, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

bool is_matrix_row(const Line& line, std::size_t n) {
  if (line.tokens.size() != 1 || line.tokens[0].size() != n) return false;
  return line.tokens[0].find_first_not_of("01") == std::string::npos;
}

}  // namespace

AdjacencyText parse_adjacency_text(std::string_view text, bool allow_loops) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty digraph description");
  const Line& header = lines.front();
  if (header.tokens.size() != 1) fail(header.number, "first line must hold the vertex count");
  AdjacencyText out;
  out.n = parse_index(header, header.tokens[0]);
  if (out.n == 0 || out.n > kMaxVertices)
    fail(header.number, "vertex count must be in 1.." + std::to_string(kMaxVertices));

  const bool matrix = lines.size() > 1 && is_matrix_row(lines[1], out.n);
  if (matrix) {
    if (lines.size() != out.n + 1)
      fail(lines.back().number, "adjacency matrix must have exactly n rows");
    for (std::size_t i = 0; i < out.n; ++i) {
      const Line& row = lines[i + 1];
      if (!is_matrix_row(row, out.n)) fail(row.number, "expected a row of n '0'/'1' characters");
      for (std::size_t j = 0; j < out.n; ++j) {
        if (row.tokens[0][j] != '1') continue;
        if (i == j && !allow_loops) fail(row.number, "nonzero diagonal entry (loop)");
        out.arcs.emplace_back(i, j);
      }
    }
    return out;
  }

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2) fail(line.number, "expected an arc 'u v'");
    std::size_t u = parse_index(line, line.tokens[0]);
    std::size_t v = parse_index(line, line.tokens[1]);
    if (u >= out.n || v >= out.n) fail(line.number, "arc endpoint out of range");
    if (u == v && !allow_loops) fail(line.number, "loops are not allowed");
    out.arcs.emplace_back(u, v);
  }
  return out;
}

Digraph parse_digraph(std::string_view text) {
  auto adj = parse_adjacency_text(text, false);
  return Digraph::from_arcs(adj.n, adj.arcs);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Digraph read_digraph_file(const std::string& path) { return parse_digraph(read_text_file(path)); }

std::string format_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace idio
