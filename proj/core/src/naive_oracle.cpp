#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "matchbound/error.hpp"
#include "matchbound/exact_oracle.hpp"

namespace matchbound {

// Shares nothing with the branch-and-bound search. Subsets are visited in
// increasing bitmask order; covered[S] is derived from S minus its lowest edge,
// which has already been visited.
std::size_t naive_enumerate_max(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kNaiveMaxEdges) {
    throw MatchboundError(ErrorKind::InstanceTooLarge,
                          "(naive enumeration needs m <= " + std::to_string(kNaiveMaxEdges) +
                              ", got " + std::to_string(m) + ")");
  }

  // At most 2m <= 40 endpoints, so relabelled vertices fit in 64 bits.
  std::vector<std::int64_t> relabel(g.vertex_count(), -1);
  int next_label = 0;
  std::vector<std::uint64_t> edge_mask(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge e = g.edges()[i];
    for (Vertex x : {e.u, e.v}) {
      if (relabel[x] < 0) relabel[x] = next_label++;
    }
    edge_mask[i] = (std::uint64_t{1} << relabel[e.u]) | (std::uint64_t{1} << relabel[e.v]);
  }

  constexpr std::uint64_t kInvalid = ~std::uint64_t{0};
  const std::uint64_t subsets = std::uint64_t{1} << m;
  std::vector<std::uint64_t> covered(subsets, 0);
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    const std::uint64_t rest = covered[s & (s - 1)];
    if (rest == kInvalid || (rest & edge_mask[low]) != 0) {
      covered[s] = kInvalid;
      continue;
    }
    covered[s] = rest | edge_mask[low];
    best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

}  // namespace matchbound
