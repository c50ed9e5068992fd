#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchbound/graph.hpp"

namespace matchbound {

// A set of pairwise vertex-disjoint edges of a host graph.
//
// The matching keeps a non-owning pointer to its graph, which must outlive
// it. Matched edges are normalized (u < v) and kept in sorted order, so every
// scan over edges() is deterministic regardless of how the matching was built.
class Matching {
 public:
  explicit Matching(const Graph& graph);

  const Graph& graph() const noexcept { return *graph_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::size_t covered_count() const noexcept { return 2 * edges_.size(); }

  bool is_covered(Vertex v) const { return partner_.at(v) != kUnmatched; }
  std::optional<Vertex> partner(Vertex v) const;
  bool contains(Edge e) const;

  // Throws NotAnEdge if e is not in the graph, SharedVertex if an endpoint is
  // already covered.
  void add(Edge e);
  // Throws NotMatched if e is not in the matching.
  void remove(Edge e);

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.graph_ == b.graph_ && a.edges_ == b.edges_;
  }

 private:
  static constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();

  const Graph* graph_;
  std::vector<Edge> edges_;
  std::vector<Vertex> partner_;
};

// Degree split of one matched edge (u, v) against the covered set M.
// two_s = d_in_u + d_in_v + 2 * (d_out_u + d_out_v), i.e. twice the edge's
// share of m when the matching is maximal.
struct MatchedEdgeStats {
  Edge edge;
  std::size_t d_in_u = 0;
  std::size_t d_in_v = 0;
  std::size_t d_out_u = 0;
  std::size_t d_out_v = 0;
  std::size_t two_s = 0;

  friend bool operator==(const MatchedEdgeStats&, const MatchedEdgeStats&) = default;
};

// Builds a Matching from arbitrary pairs (either orientation). Throws NotAnEdge
// or SharedVertex naming the first offending pair / vertex.
Matching validate_matching(const Graph& g, std::span<const Edge> edges);

// Adds every graph edge with two uncovered endpoints, scanning in canonical
// edge order. Output is inclusion-maximal and contains the input.
Matching greedy_maximalize(Matching m);

// True iff no graph edge has both endpoints uncovered.
bool is_maximal(const Matching& m);

// Throws NotMatched if e (either orientation) is not a matched edge.
MatchedEdgeStats edge_stats(const Matching& m, Edge e);

// Neighbors of u not covered by m, ascending.
std::vector<Vertex> uncovered_neighbors(const Matching& m, Vertex u);

// "k <size>" then one "u v" line per matched edge, sorted.
void write_matching(std::ostream& out, const Matching& m);
std::string write_matching(const Matching& m);

}  // namespace matchbound
