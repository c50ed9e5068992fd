#include "matchbound/matching.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "matchbound/error.hpp"

namespace matchbound {
namespace {

std::string pair_text(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Matching::Matching(const Graph& graph)
    : graph_(&graph), partner_(graph.vertex_count(), kUnmatched) {}

std::optional<Vertex> Matching::partner(Vertex v) const {
  const Vertex p = partner_.at(v);
  if (p == kUnmatched) return std::nullopt;
  return p;
}

bool Matching::contains(Edge e) const {
  e = normalized(e);
  return e.u < partner_.size() && partner_[e.u] == e.v && e.u != e.v;
}

void Matching::add(Edge e) {
  e = normalized(e);
  if (!graph_->has_edge(e.u, e.v)) {
    throw MatchboundError(ErrorKind::NotAnEdge, pair_text(e));
  }
  for (Vertex w : {e.u, e.v}) {
    if (partner_[w] != kUnmatched) {
      throw MatchboundError(ErrorKind::SharedVertex, "(" + std::to_string(w) + ")");
    }
  }
  partner_[e.u] = e.v;
  partner_[e.v] = e.u;
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

void Matching::remove(Edge e) {
  e = normalized(e);
  if (!contains(e)) throw MatchboundError(ErrorKind::NotMatched, pair_text(e));
  partner_[e.u] = kUnmatched;
  partner_[e.v] = kUnmatched;
  edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), e));
}

Matching validate_matching(const Graph& g, std::span<const Edge> edges) {
  Matching m(g);
  for (const Edge& e : edges) m.add(e);
  return m;
}

Matching greedy_maximalize(Matching m) {
  for (const Edge& e : m.graph().edges()) {
    if (!m.is_covered(e.u) && !m.is_covered(e.v)) m.add(e);
  }
  return m;
}

bool is_maximal(const Matching& m) {
  return std::none_of(m.graph().edges().begin(), m.graph().edges().end(),
                      [&](const Edge& e) { return !m.is_covered(e.u) && !m.is_covered(e.v); });
}

MatchedEdgeStats edge_stats(const Matching& m, Edge e) {
  e = normalized(e);
  if (!m.contains(e)) throw MatchboundError(ErrorKind::NotMatched, pair_text(e));

  auto split = [&](Vertex x, std::size_t& d_in, std::size_t& d_out) {
    for (Vertex w : m.graph().neighbors(x)) {
      if (m.is_covered(w)) {
        ++d_in;
      } else {
        ++d_out;
      }
    }
  };
  MatchedEdgeStats s;
  s.edge = e;
  split(e.u, s.d_in_u, s.d_out_u);
  split(e.v, s.d_in_v, s.d_out_v);
  s.two_s = s.d_in_u + s.d_in_v + 2 * (s.d_out_u + s.d_out_v);
  return s;
}

std::vector<Vertex> uncovered_neighbors(const Matching& m, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : m.graph().neighbors(u)) {
    if (!m.is_covered(w)) out.push_back(w);
  }
  return out;
}

void write_matching(std::ostream& out, const Matching& m) {
  out << "k " << m.size() << '\n';
  for (const Edge& e : m.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string write_matching(const Matching& m) {
  std::ostringstream out;
  write_matching(out, m);
  return out.str();
}

}  // namespace matchbound
