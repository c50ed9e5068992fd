#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "matchbound/graph.hpp"

namespace matchbound {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0 <= u, v < n)
//
// Comment and blank lines may appear anywhere. Malformed input raises
// SyntaxError naming the 1-based line; graph validation errors come from
// Graph::build.
Graph parse_edgelist(std::istream& in);
Graph parse_edgelist(std::string_view text);

// Writes the header and the normalized edges in sorted order, no comments.
void write_edgelist(std::ostream& out, const Graph& g);
std::string write_edgelist(const Graph& g);

}  // namespace matchbound
