#include "matchbound/bounds.hpp"

#include <algorithm>
#include <cstdint>

#include "matchbound/error.hpp"
#include "matchbound/local_search.hpp"

namespace matchbound {
namespace {

using Wide = std::uint64_t;

bool literal_disjunction(const MatchedEdgeStats& s) {
  return (s.d_out_u == 1 && s.d_out_v == 1) || std::min(s.d_out_u, s.d_out_v) == 0;
}

bool strict_disjunction(const Matching& m, const MatchedEdgeStats& s) {
  if (std::min(s.d_out_u, s.d_out_v) == 0) return true;
  return s.d_out_u == 1 && s.d_out_v == 1 &&
         uncovered_neighbors(m, s.edge.u) == uncovered_neighbors(m, s.edge.v);
}

}  // namespace

bool check_theorem1(const Graph& g, std::size_t k) {
  if (g.vertex_count() == 0) return true;
  return Wide{g.vertex_count()} * k >= Wide{g.edge_count()};
}

bool check_theorem2(const Graph& g, std::size_t k) {
  if (g.max_degree() == 0) return true;
  return 3 * Wide{g.max_degree()} * k >= 2 * Wide{g.edge_count()};
}

bool Lemma1Report::claims_1_to_3_hold() const {
  return std::all_of(edges.begin(), edges.end(), [](const Lemma1EdgeReport& e) {
    return e.claim1 && e.claim2 && e.claim3;
  });
}

bool Lemma1Report::claim4_holds() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const Lemma1EdgeReport& e) { return e.claim4; });
}

bool Lemma1Report::ok() const {
  return claims_1_to_3_hold() && (!claim4_asserted || claim4_holds());
}

Lemma1Report check_lemma1(const Matching& m, MatchingClass cls) {
  const Graph& g = m.graph();
  const Wide d = g.max_degree();
  const Wide two_k = m.covered_count();
  const Wide outside = g.vertex_count() - m.covered_count();

  Lemma1Report report;
  report.claim4_asserted = cls != MatchingClass::Arbitrary;
  for (const Edge& e : m.edges()) {
    Lemma1EdgeReport r;
    r.stats = edge_stats(m, e);
    const auto& s = r.stats;
    r.claim1 = s.d_in_u + s.d_out_u == g.degree(e.u) && s.d_in_v + s.d_out_v == g.degree(e.v) &&
               g.degree(e.u) <= d && g.degree(e.v) <= d;
    r.claim2 = s.d_in_u <= two_k && s.d_in_v <= two_k;
    r.claim3 = s.d_out_u <= outside && s.d_out_v <= outside;
    r.claim4 = strict_disjunction(m, s);
    r.claim4_literal = literal_disjunction(s);
    report.edges.push_back(r);
  }
  return report;
}

bool check_lemma2(const Matching& m) {
  if (!is_maximal(m)) {
    throw MatchboundError(ErrorKind::NotMaximal, "(an edge has two uncovered endpoints)");
  }
  Wide two_s_sum = 0;
  Wide d_in_sum = 0;
  for (const Edge& e : m.edges()) {
    const auto s = edge_stats(m, e);
    two_s_sum += s.two_s;
    d_in_sum += s.d_in_u + s.d_in_v;
  }
  return two_s_sum == 2 * Wide{m.graph().edge_count()} && d_in_sum % 2 == 0;
}

bool BoundCertificate::in_hypothesis_checks_pass() const {
  if (maximal && !lemma2_identity_holds) return false;
  if (!(maximal && swap_stable)) return true;
  const bool edges_ok = std::all_of(per_edge.begin(), per_edge.end(), [](const CertifiedEdge& e) {
    return e.claim4_ok && e.s_bound_ok;
  });
  return bound_mn_holds && bound_23md_holds && edges_ok;
}

bool BoundCertificate::all_true() const {
  const bool edges_ok = std::all_of(per_edge.begin(), per_edge.end(), [](const CertifiedEdge& e) {
    return e.claim4_ok && e.s_bound_ok;
  });
  return bound_mn_holds && bound_23md_holds && lemma2_identity_holds && maximal && swap_stable &&
         edges_ok;
}

BoundCertificate certify(const Matching& m) {
  const Graph& g = m.graph();
  BoundCertificate c;
  c.n = g.vertex_count();
  c.m = g.edge_count();
  c.d = g.max_degree();
  c.k = m.size();
  c.bound_mn_holds = check_theorem1(g, c.k);
  c.bound_23md_holds = check_theorem2(g, c.k);
  c.maximal = is_maximal(m);
  c.swap_stable = is_swap_stable(m);
  c.lemma2_identity_holds = c.maximal && check_lemma2(m);
  for (const Edge& e : m.edges()) {
    CertifiedEdge ce;
    ce.stats = edge_stats(m, e);
    ce.claim4_ok = strict_disjunction(m, ce.stats);
    ce.s_bound_ok = Wide{ce.stats.two_s} <= 3 * Wide{c.d};
    c.per_edge.push_back(ce);
  }
  return c;
}

}  // namespace matchbound
