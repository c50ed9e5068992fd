#include "matchbound/graph.hpp"

#include <algorithm>
#include <string>

#include "matchbound/error.hpp"

namespace matchbound {

Graph Graph::build(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= vertex_count || raw.v >= vertex_count) {
      const Vertex bad = raw.u >= vertex_count ? raw.u : raw.v;
      throw MatchboundError(ErrorKind::VertexOutOfRange,
                            "(" + std::to_string(bad) + ")");
    }
    if (raw.u == raw.v) {
      throw MatchboundError(ErrorKind::LoopEdge,
                            "(" + std::to_string(raw.u) + ")");
    }
    g.edges_.push_back(normalized(raw));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw MatchboundError(ErrorKind::DuplicateEdge,
                          "(" + std::to_string(dup->u) + "," +
                              std::to_string(dup->v) + ")");
  }

  g.adjacency_.resize(vertex_count);
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    g.max_degree_ = std::max(g.max_degree_, list.size());
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

}  // namespace matchbound
