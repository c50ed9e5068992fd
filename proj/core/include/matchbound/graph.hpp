#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace matchbound {

using Vertex = std::uint32_t;

// An undirected edge. Graph and Matching always store edges with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e) { return e.u <= e.v ? e : Edge{e.v, e.u}; }

// Immutable simple undirected graph on vertices 0..n-1.
//
// Isolated vertices are allowed and count towards n. Edges are kept in
// canonical sorted order and every adjacency list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Validates and normalizes `edges`. Throws MatchboundError with kind
  // LoopEdge, DuplicateEdge or VertexOutOfRange.
  static Graph build(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  // O(log deg) lookup; false for out-of-range ids.
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t max_degree_ = 0;
};

// Free-function spelling of Graph::build.
inline Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges) {
  return Graph::build(vertex_count, edges);
}

}  // namespace matchbound
