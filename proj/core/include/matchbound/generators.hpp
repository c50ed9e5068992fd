#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "matchbound/graph.hpp"

namespace matchbound {

// Exact probability num/den with 0 <= num <= den, den > 0.
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Accepts "a/b", a decimal such as "0.35" or "1", converted exactly.
  static Probability parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Probability&, const Probability&) = default;
};

// SplitMix64 (Steele, Lea, Flood). The reference constants are used
// unchanged so other implementations can reproduce the random family.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // True with probability exactly p over the top 53 bits of next():
  // (next() >> 11) * den < num * 2^53.
  bool bernoulli(Probability p);

 private:
  std::uint64_t state_;
};

namespace family {
// r vertex-disjoint triangles on {3i, 3i+1, 3i+2}.
struct Triangles { std::uint32_t r = 1; };
struct Path { std::uint32_t n = 1; };
struct Cycle { std::uint32_t n = 3; };
struct Complete { std::uint32_t n = 1; };
// Center is vertex 0, leaves are 1..leaves.
struct Star { std::uint32_t leaves = 1; };
// Each pair (u, v), u < v, visited in lexicographic order and kept iff
// SplitMix64(seed).bernoulli(p).
struct Random {
  std::uint32_t n = 1;
  Probability p;
  std::uint64_t seed = 0;
};
}  // namespace family

using GraphFamilySpec =
    std::variant<family::Triangles, family::Path, family::Cycle,
                 family::Complete, family::Star, family::Random>;

// Throws InvalidParameter for zero sizes, cycle(n < 3) or p outside [0, 1].
Graph generate(const GraphFamilySpec& spec);

// Parses "<family> <params...>" as used by the CLI, e.g. {"random", "12",
// "1/3", "7"}. Throws InvalidParameter on unknown families or bad arity.
GraphFamilySpec parse_family_spec(std::string_view family_name,
                                  std::span<const std::string> params);

// "triangles 4", "random 12 1/3 7", ...
std::string describe(const GraphFamilySpec& spec);

}  // namespace matchbound
