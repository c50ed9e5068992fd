#include <gtest/gtest.h>

#include <random>

#include "matchbound/error.hpp"
#include "matchbound/exact_oracle.hpp"
#include "matchbound/generators.hpp"
#include "matchbound/local_search.hpp"
#include "test_support.hpp"

namespace matchbound {
namespace {

using namespace matchbound::family;

Matching make(const Graph& g, std::vector<Edge> edges) { return validate_matching(g, edges); }

std::vector<Edge> as_vector(const Matching& m) { return {m.edges().begin(), m.edges().end()}; }

TEST(LocalSearchTest, FindSwapOnPath) {
  const Graph path = generate(Path{4});
  const auto move = find_swap(make(path, {{1, 2}}));
  ASSERT_TRUE(move.has_value());
  EXPECT_EQ(*move, (SwapMove{{1, 2}, {1, 0}, {2, 3}}));
}

TEST(LocalSearchTest, FindSwapAbsentOnTriangle) {
  const Graph tri = generate(Complete{3});
  EXPECT_FALSE(find_swap(make(tri, {{0, 1}})).has_value());
}

TEST(LocalSearchTest, FindSwapAbsentOnTwoTriangles) {
  const Graph g = generate(Triangles{2});
  const Matching m = make(g, {{0, 1}, {3, 4}});
  EXPECT_EQ(uncovered_neighbors(m, 0), std::vector<Vertex>{2});
  EXPECT_EQ(uncovered_neighbors(m, 1), std::vector<Vertex>{2});
  EXPECT_EQ(uncovered_neighbors(m, 3), std::vector<Vertex>{5});
  EXPECT_EQ(uncovered_neighbors(m, 4), std::vector<Vertex>{5});
  EXPECT_FALSE(find_swap(m).has_value());
}

TEST(LocalSearchTest, FindSwapPicksLexicographicallySmallestPair) {
  // Edge (1,2) matched; N_out(1) = {0, 3}, N_out(2) = {0, 4}. (0,0) is
  // invalid, so the smallest valid pair is (0, 4).
  const Graph g = Graph::build(5, std::vector<Edge>{{1, 2}, {0, 1}, {1, 3}, {0, 2}, {2, 4}});
  const auto move = find_swap(make(g, {{1, 2}}));
  ASSERT_TRUE(move.has_value());
  EXPECT_EQ(move->added_1, (Edge{1, 0}));
  EXPECT_EQ(move->added_2, (Edge{2, 4}));
}

TEST(LocalSearchTest, ApplySwapOnPath) {
  const Graph path = generate(Path{4});
  const Matching m = make(path, {{1, 2}});
  const Matching out = apply_swap(m, *find_swap(m));
  EXPECT_EQ(as_vector(out), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(LocalSearchTest, ApplySwapOnCycle) {
  const Graph c6 = generate(Cycle{6});
  const Matching m = make(c6, {{0, 1}, {3, 4}});
  const Matching out = apply_swap(m, SwapMove{{0, 1}, {0, 5}, {1, 2}});
  EXPECT_EQ(out.size(), 3u);
  const auto edges = as_vector(out);
  EXPECT_EQ(edges, (std::vector<Edge>{{0, 5}, {1, 2}, {3, 4}}));
  EXPECT_NO_THROW(validate_matching(c6, edges));
}

TEST(LocalSearchTest, ApplySwapRejectsStaleMoves) {
  const Graph c6 = generate(Cycle{6});
  const Matching m = make(c6, {{0, 1}, {3, 4}});
  auto kind = [&](const SwapMove& move) {
    try {
      apply_swap(m, move);
    } catch (const MatchboundError& e) {
      return e.kind();
    }
    return ErrorKind::SyntaxError;
  };
  EXPECT_EQ(kind({{1, 2}, {1, 0}, {2, 3}}), ErrorKind::StaleMove);  // (1,2) unmatched
  EXPECT_EQ(kind({{0, 1}, {0, 5}, {1, 5}}), ErrorKind::StaleMove);  // u' == v'
  EXPECT_EQ(kind({{0, 1}, {0, 3}, {1, 2}}), ErrorKind::StaleMove);  // not an edge
  EXPECT_NO_THROW(apply_swap(m, SwapMove{{3, 4}, {3, 2}, {4, 5}}));

  const Matching after = apply_swap(m, SwapMove{{0, 1}, {0, 5}, {1, 2}});
  EXPECT_THROW(apply_swap(after, SwapMove{{3, 4}, {3, 2}, {4, 5}}), MatchboundError);
}

TEST(LocalSearchTest, StabilizePath) {
  const Graph path = generate(Path{4});
  EXPECT_EQ(stabilize(path).size(), 2u);
  // From the "bad" maximal seed a swap is required.
  const auto result = stabilize_with_stats(path, make(path, {{1, 2}}));
  EXPECT_EQ(result.matching.size(), 2u);
  EXPECT_EQ(result.swaps, 1u);
}

TEST(LocalSearchTest, StabilizeTrianglesAndComplete) {
  for (std::uint32_t r = 1; r <= 10; ++r) EXPECT_EQ(stabilize(generate(Triangles{r})).size(), r);
  EXPECT_EQ(stabilize(generate(Complete{4})).size(), 2u);
}

TEST(LocalSearchTest, StabilizeEmptyGraph) {
  const Graph empty = Graph::build(0, {});
  EXPECT_EQ(stabilize(empty).size(), 0u);
  const Graph edgeless = Graph::build(5, {});
  EXPECT_EQ(stabilize(edgeless).size(), 0u);
}

TEST(LocalSearchTest, SeedFromAnotherGraphIsRevalidated) {
  const Graph path = generate(Path{4});
  const Graph other = generate(Star{3});
  EXPECT_THROW(stabilize(path, make(other, {{0, 3}})), MatchboundError);
}

// Output invariants against brute-force scans and the exact oracle.
TEST(LocalSearchTest, PropertyStableMaximalAndTwoThirds) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t n = 1 + rng() % 14;
    const Graph g = generate(Random{n, Probability{1 + rng() % 9, 10}, rng()});
    const Matching seed = validate_matching(g, testing::random_matching(g, rng, 0.4));
    const auto result = stabilize_with_stats(g, seed);
    const Matching& out = result.matching;
    const auto edges = as_vector(out);

    ASSERT_TRUE(testing::brute_is_matching(g, edges));
    EXPECT_TRUE(testing::brute_is_maximal(g, edges));
    EXPECT_FALSE(testing::brute_has_length3_augmenting_path(g, edges));
    EXPECT_TRUE(is_swap_stable(out));
    EXPECT_GE(out.size(), seed.size());
    EXPECT_LE(result.swaps, std::size_t{n} / 2);

    for (const Edge& e : out.edges()) {
      const auto s = edge_stats(out, e);
      const bool both_one = s.d_out_u == 1 && s.d_out_v == 1;
      EXPECT_TRUE(both_one || std::min(s.d_out_u, s.d_out_v) == 0);
      if (both_one) EXPECT_EQ(uncovered_neighbors(out, e.u), uncovered_neighbors(out, e.v));
    }

    if (g.edge_count() <= 60) {
      const std::size_t k = exact_max_matching(g, {60, 24}).size();
      EXPECT_LE(out.size(), k);
      EXPECT_GE(3 * out.size(), 2 * k);
    }
  }
}

TEST(LocalSearchTest, Deterministic) {
  const Graph g = generate(Random{16, Probability{1, 4}, 99});
  EXPECT_EQ(stabilize(g), stabilize(g));
}

}  // namespace
}  // namespace matchbound
