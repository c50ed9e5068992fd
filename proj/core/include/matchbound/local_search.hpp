#pragma once

#include <cstddef>
#include <optional>

#include "matchbound/matching.hpp"

namespace matchbound {

// 2-for-1 exchange: drop matched (u, v), add (u, u_prime) and (v, v_prime)
// where u_prime != v_prime are both uncovered. Equivalent to augmenting along
// the length-3 path u_prime - u - v - v_prime.
struct SwapMove {
  Edge removed;     // (u, v) as stored in the matching, u < v
  Edge added_1;     // (u, u_prime)
  Edge added_2;     // (v, v_prime)

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

// First applicable move scanning matched edges in sorted order; within an
// edge, the lexicographically smallest (u_prime, v_prime).
std::optional<SwapMove> find_swap(const Matching& m);

// Throws StaleMove when the move no longer applies to m.
Matching apply_swap(Matching m, const SwapMove& move);

// No matched edge admits a 2-for-1 exchange.
inline bool is_swap_stable(const Matching& m) { return !find_swap(m).has_value(); }

struct StabilizeResult {
  Matching matching;
  std::size_t swaps = 0;
};

// Repeats { greedy_maximalize; find_swap; apply_swap } until no move applies.
// The result is maximal and swap-stable; at most floor(n/2) swaps happen.
// Throws what validate would if `seed` belongs to another graph.
StabilizeResult stabilize_with_stats(const Graph& g,
                                     std::optional<Matching> seed = std::nullopt);

inline Matching stabilize(const Graph& g, std::optional<Matching> seed = std::nullopt) {
  return stabilize_with_stats(g, std::move(seed)).matching;
}

}  // namespace matchbound
