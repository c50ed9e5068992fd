#include "matchbound/local_search.hpp"

#include <string>

#include "matchbound/error.hpp"

namespace matchbound {

std::optional<SwapMove> find_swap(const Matching& m) {
  for (const Edge& e : m.edges()) {
    const auto out_u = uncovered_neighbors(m, e.u);
    if (out_u.empty()) continue;
    const auto out_v = uncovered_neighbors(m, e.v);
    // The inner loop runs at most twice: only one v_prime can equal u_prime.
    for (Vertex u_prime : out_u) {
      for (Vertex v_prime : out_v) {
        if (u_prime != v_prime) {
          return SwapMove{e, {e.u, u_prime}, {e.v, v_prime}};
        }
      }
    }
  }
  return std::nullopt;
}

Matching apply_swap(Matching m, const SwapMove& move) {
  const Edge removed = normalized(move.removed);
  const Vertex u = move.added_1.u;
  const Vertex v = move.added_2.u;
  const Vertex u_prime = move.added_1.v;
  const Vertex v_prime = move.added_2.v;
  const Graph& g = m.graph();
  const std::size_t n = g.vertex_count();

  const bool shape_ok = normalized(Edge{u, v}) == removed && u_prime != v_prime &&
                        u_prime < n && v_prime < n;
  if (!shape_ok || !m.contains(removed) || m.is_covered(u_prime) ||
      m.is_covered(v_prime) || !g.has_edge(u, u_prime) || !g.has_edge(v, v_prime)) {
    throw MatchboundError(ErrorKind::StaleMove,
                          "(remove " + std::to_string(removed.u) + "," +
                              std::to_string(removed.v) + ")");
  }
  m.remove(removed);
  m.add(move.added_1);
  m.add(move.added_2);
  return m;
}

StabilizeResult stabilize_with_stats(const Graph& g, std::optional<Matching> seed) {
  Matching current = seed ? validate_matching(g, seed->edges()) : Matching(g);
  std::size_t swaps = 0;
  while (true) {
    current = greedy_maximalize(std::move(current));
    const auto move = find_swap(current);
    if (!move) break;
    current = apply_swap(std::move(current), *move);
    ++swaps;
  }
  return {std::move(current), swaps};
}

}  // namespace matchbound
