#pragma once

#include <cstddef>
#include <vector>

#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"

namespace matchbound {

// n * k >= m. Vacuously true for n = 0.
bool check_theorem1(const Graph& g, std::size_t k);

// 3 * d * k >= 2 * m. Vacuously true for d = 0 (then m = 0).
bool check_theorem2(const Graph& g, std::size_t k);

// What the caller knows about a matching handed to check_lemma1. The
// out-degree disjunction (claim 4) only holds for maximum or swap-stable
// matchings, so it is asserted only under those tags.
enum class MatchingClass { Arbitrary, SwapStable, Maximum };

struct Lemma1EdgeReport {
  MatchedEdgeStats stats;
  bool claim1 = false;  // d_in + d_out = deg <= d, both endpoints
  bool claim2 = false;  // d_in <= 2k, both endpoints
  bool claim3 = false;  // d_out <= n - 2k, both endpoints
  // min(d_out_u, d_out_v) = 0, or both are 1 and reach the same outside
  // vertex. Maximum and swap-stable matchings satisfy this form.
  bool claim4 = false;
  // Weaker reading without the shared-vertex condition; a matching can pass
  // it and still admit a 2-for-1 exchange.
  bool claim4_literal = false;
};

struct Lemma1Report {
  std::vector<Lemma1EdgeReport> edges;
  bool claim4_asserted = false;

  bool claims_1_to_3_hold() const;
  bool claim4_holds() const;
  // Claims 1-3, plus claim 4 when asserted.
  bool ok() const;
};

Lemma1Report check_lemma1(const Matching& m, MatchingClass cls = MatchingClass::Arbitrary);

// Sum of two_s over matched edges equals 2m, and sum of (d_in_u + d_in_v) is
// even. Throws NotMaximal if some edge has two uncovered endpoints.
bool check_lemma2(const Matching& m);

struct CertifiedEdge {
  MatchedEdgeStats stats;
  bool claim4_ok = false;   // same condition as Lemma1EdgeReport::claim4
  bool s_bound_ok = false;  // two_s <= 3d

  friend bool operator==(const CertifiedEdge&, const CertifiedEdge&) = default;
};

struct BoundCertificate {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  bool bound_mn_holds = false;
  bool bound_23md_holds = false;
  bool lemma2_identity_holds = false;  // false when the matching is not maximal
  std::vector<CertifiedEdge> per_edge;
  bool maximal = false;
  bool swap_stable = false;

  // Every check whose hypothesis the matching meets passed. The bounds,
  // claim 4 and the per-edge s bound need maximal && swap_stable; the
  // identity needs maximal. A matching meeting no hypothesis passes vacuously.
  bool in_hypothesis_checks_pass() const;
  bool all_true() const;

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

// Never throws on check failures; they are recorded in the certificate.
BoundCertificate certify(const Matching& m);

}  // namespace matchbound
