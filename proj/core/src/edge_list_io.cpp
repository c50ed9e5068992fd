#include "matchbound/edge_list_io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "matchbound/error.hpp"

namespace matchbound {
namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw MatchboundError(ErrorKind::SyntaxError,
                        "(line " + std::to_string(line) + ": " + what + ")");
}

// Splits a line into exactly two unsigned integers, or nullopt if the line is
// blank or a comment.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(
    std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back(line.substr(start, i - start));
  }
  if (tokens.empty() || tokens.front().front() == '#') return std::nullopt;
  if (tokens.size() != 2) syntax_error(line_no, "expected two integers");

  std::uint64_t values[2];
  for (int t = 0; t < 2; ++t) {
    const auto tok = tokens[t];
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), values[t]);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      syntax_error(line_no, "not a non-negative integer: '" + std::string(tok) + "'");
    }
  }
  return std::pair{values[0], values[1]};
}

}  // namespace

Graph parse_edgelist(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const auto pair = parse_pair(line, line_no);
    if (!pair) continue;
    if (!header) {
      if (pair->first > std::numeric_limits<Vertex>::max()) {
        syntax_error(line_no, "vertex count too large");
      }
      header = pair;
      edges.reserve(pair->second);
      continue;
    }
    if (edges.size() == header->second) syntax_error(line_no, "more edges than declared");
    const std::uint64_t limit = std::numeric_limits<Vertex>::max();
    if (pair->first > limit || pair->second > limit) {
      // Still an out-of-range id, reported the same way Graph::build does.
      throw MatchboundError(ErrorKind::VertexOutOfRange,
                            "(" + std::to_string(std::max(pair->first, pair->second)) + ")");
    }
    edges.push_back({static_cast<Vertex>(pair->first), static_cast<Vertex>(pair->second)});
  }
  if (!header) syntax_error(line_no + 1, "missing 'n m' header");
  if (edges.size() != header->second) {
    syntax_error(line_no + 1, "expected " + std::to_string(header->second) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Graph::build(header->first, edges);
}

Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edgelist(in);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  write_edgelist(out, g);
  return out.str();
}

}  // namespace matchbound
