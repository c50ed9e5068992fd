#include "matchbound/generators.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "matchbound/error.hpp"

namespace matchbound {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw MatchboundError(ErrorKind::InvalidParameter, "(" + what + ")");
}

template <typename T>
T parse_unsigned(std::string_view text, const char* what) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    invalid(std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::uint32_t positive(std::string_view text, const char* what) {
  const auto value = parse_unsigned<std::uint32_t>(text, what);
  if (value == 0) invalid(std::string(what) + " must be positive");
  return value;
}

void require_positive(std::uint32_t value, const char* what) {
  if (value == 0) invalid(std::string(what) + " must be positive");
}

struct Generator {
  Graph operator()(const family::Triangles& t) const {
    require_positive(t.r, "r");
    std::vector<Edge> edges;
    edges.reserve(3 * std::size_t{t.r});
    for (Vertex i = 0; i < t.r; ++i) {
      const Vertex a = 3 * i;
      edges.push_back({a, a + 1});
      edges.push_back({a + 1, a + 2});
      edges.push_back({a, a + 2});
    }
    return Graph::build(3 * std::size_t{t.r}, edges);
  }

  Graph operator()(const family::Path& p) const {
    require_positive(p.n, "n");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < p.n; ++i) edges.push_back({i, i + 1});
    return Graph::build(p.n, edges);
  }

  Graph operator()(const family::Cycle& c) const {
    if (c.n < 3) invalid("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < c.n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, c.n - 1});
    return Graph::build(c.n, edges);
  }

  Graph operator()(const family::Complete& k) const {
    require_positive(k.n, "n");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k.n; ++u)
      for (Vertex v = u + 1; v < k.n; ++v) edges.push_back({u, v});
    return Graph::build(k.n, edges);
  }

  Graph operator()(const family::Star& s) const {
    require_positive(s.leaves, "leaves");
    std::vector<Edge> edges;
    for (Vertex leaf = 1; leaf <= s.leaves; ++leaf) edges.push_back({0, leaf});
    return Graph::build(std::size_t{s.leaves} + 1, edges);
  }

  Graph operator()(const family::Random& r) const {
    require_positive(r.n, "n");
    if (r.p.den == 0 || r.p.num > r.p.den) invalid("p must lie in [0,1]");
    SplitMix64 rng(r.seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < r.n; ++u)
      for (Vertex v = u + 1; v < r.n; ++v)
        if (rng.bernoulli(r.p)) edges.push_back({u, v});
    return Graph::build(r.n, edges);
  }
};

}  // namespace

bool SplitMix64::bernoulli(Probability p) {
  __extension__ using Wide = unsigned __int128;
  const Wide draw = next() >> 11;
  return draw * p.den < static_cast<Wide>(p.num) << 53;
}

Probability Probability::parse(std::string_view text) {
  Probability p;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    p.num = parse_unsigned<std::uint64_t>(text.substr(0, slash), "p");
    p.den = parse_unsigned<std::uint64_t>(text.substr(slash + 1), "p");
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) invalid("p: '" + std::string(text) + "'");
    p.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_unsigned<std::uint64_t>(whole, "p");
    if (w > 1) invalid("p must lie in [0,1]");
    p.num = w * p.den + parse_unsigned<std::uint64_t>(frac, "p");
  } else {
    p.num = parse_unsigned<std::uint64_t>(text, "p");
    p.den = 1;
  }
  if (p.den == 0 || p.num > p.den) invalid("p must lie in [0,1]");
  return p;
}

std::string Probability::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Graph generate(const GraphFamilySpec& spec) { return std::visit(Generator{}, spec); }

GraphFamilySpec parse_family_spec(std::string_view family_name,
                                  std::span<const std::string> params) {
  auto arity = [&](std::size_t expected) {
    if (params.size() != expected) {
      invalid(std::string(family_name) + " expects " + std::to_string(expected) +
              " parameter(s)");
    }
  };
  if (family_name == "triangles") {
    arity(1);
    return family::Triangles{positive(params[0], "r")};
  }
  if (family_name == "path") {
    arity(1);
    return family::Path{positive(params[0], "n")};
  }
  if (family_name == "cycle") {
    arity(1);
    const auto n = positive(params[0], "n");
    if (n < 3) invalid("cycle needs n >= 3");
    return family::Cycle{n};
  }
  if (family_name == "complete") {
    arity(1);
    return family::Complete{positive(params[0], "n")};
  }
  if (family_name == "star") {
    arity(1);
    return family::Star{positive(params[0], "leaves")};
  }
  if (family_name == "random") {
    arity(3);
    return family::Random{positive(params[0], "n"), Probability::parse(params[1]),
                          parse_unsigned<std::uint64_t>(params[2], "seed")};
  }
  invalid("unknown family '" + std::string(family_name) + "'");
}

std::string describe(const GraphFamilySpec& spec) {
  struct Describer {
    std::string operator()(const family::Triangles& t) const {
      return "triangles " + std::to_string(t.r);
    }
    std::string operator()(const family::Path& p) const {
      return "path " + std::to_string(p.n);
    }
    std::string operator()(const family::Cycle& c) const {
      return "cycle " + std::to_string(c.n);
    }
    std::string operator()(const family::Complete& k) const {
      return "complete " + std::to_string(k.n);
    }
    std::string operator()(const family::Star& s) const {
      return "star " + std::to_string(s.leaves);
    }
    std::string operator()(const family::Random& r) const {
      return "random " + std::to_string(r.n) + " " + r.p.to_string() + " " +
             std::to_string(r.seed);
    }
  };
  return std::visit(Describer{}, spec);
}

}  // namespace matchbound
