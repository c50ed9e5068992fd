#pragma once

#include <cstddef>

#include "matchbound/matching.hpp"

namespace matchbound {

struct OracleLimits {
  std::size_t max_edges = 40;
  std::size_t max_vertices = 24;
};

// Maximum matching by branch and bound. Throws InstanceTooLarge when the graph
// exceeds `limits`, InvalidParameter when a limit is zero.
//
// Branches on the lowest-id vertex with positive residual degree: first leave
// it uncovered, then match it with each residual neighbor in ascending order.
// A node is pruned when size + floor(active / 2) <= best, where active counts
// vertices of positive residual degree. The first maximum found is returned,
// so results are deterministic.
Matching exact_max_matching(const Graph& g, OracleLimits limits = {});

// Independent check: enumerates all 2^m edge subsets and returns the size of
// the largest one that is a matching. Throws InstanceTooLarge for m > 20.
std::size_t naive_enumerate_max(const Graph& g);

inline constexpr std::size_t kNaiveMaxEdges = 20;

}  // namespace matchbound
