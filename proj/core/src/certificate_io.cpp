#include "matchbound/certificate_io.hpp"

#include <json.hpp>
#include <ostream>

#include "matchbound/error.hpp"

namespace matchbound {
namespace {

using Json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string certificate_to_json(const BoundCertificate& c, int indent) {
  Json doc;
  doc["n"] = c.n;
  doc["m"] = c.m;
  doc["d"] = c.d;
  doc["k"] = c.k;
  doc["bound_mn_holds"] = c.bound_mn_holds;
  doc["bound_23md_holds"] = c.bound_23md_holds;
  doc["lemma2_identity_holds"] = c.lemma2_identity_holds;
  Json edges = Json::array();
  for (const auto& e : c.per_edge) {
    Json item;
    item["edge"] = {e.stats.edge.u, e.stats.edge.v};
    item["d_in_u"] = e.stats.d_in_u;
    item["d_in_v"] = e.stats.d_in_v;
    item["d_out_u"] = e.stats.d_out_u;
    item["d_out_v"] = e.stats.d_out_v;
    item["two_s"] = e.stats.two_s;
    item["claim4_ok"] = e.claim4_ok;
    item["s_bound_ok"] = e.s_bound_ok;
    edges.push_back(std::move(item));
  }
  doc["per_edge"] = std::move(edges);
  doc["maximal"] = c.maximal;
  doc["swap_stable"] = c.swap_stable;
  return doc.dump(indent);
}

BoundCertificate certificate_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    BoundCertificate c;
    c.n = doc.at("n").get<std::size_t>();
    c.m = doc.at("m").get<std::size_t>();
    c.d = doc.at("d").get<std::size_t>();
    c.k = doc.at("k").get<std::size_t>();
    c.bound_mn_holds = doc.at("bound_mn_holds").get<bool>();
    c.bound_23md_holds = doc.at("bound_23md_holds").get<bool>();
    c.lemma2_identity_holds = doc.at("lemma2_identity_holds").get<bool>();
    for (const auto& item : doc.at("per_edge")) {
      CertifiedEdge e;
      const auto& edge = item.at("edge");
      if (!edge.is_array() || edge.size() != 2) {
        throw MatchboundError(ErrorKind::SyntaxError, "(edge must be [u, v])");
      }
      e.stats.edge = {edge[0].get<Vertex>(), edge[1].get<Vertex>()};
      e.stats.d_in_u = item.at("d_in_u").get<std::size_t>();
      e.stats.d_in_v = item.at("d_in_v").get<std::size_t>();
      e.stats.d_out_u = item.at("d_out_u").get<std::size_t>();
      e.stats.d_out_v = item.at("d_out_v").get<std::size_t>();
      e.stats.two_s = item.at("two_s").get<std::size_t>();
      e.claim4_ok = item.at("claim4_ok").get<bool>();
      e.s_bound_ok = item.at("s_bound_ok").get<bool>();
      c.per_edge.push_back(e);
    }
    c.maximal = doc.at("maximal").get<bool>();
    c.swap_stable = doc.at("swap_stable").get<bool>();
    return c;
  } catch (const Json::exception& ex) {
    throw MatchboundError(ErrorKind::SyntaxError, std::string("(certificate json: ") + ex.what() + ")");
  }
}

void write_certificate_text(std::ostream& out, const BoundCertificate& c) {
  out << "n: " << c.n << '\n'
      << "m: " << c.m << '\n'
      << "d: " << c.d << '\n'
      << "k: " << c.k << '\n'
      << "bound_mn_holds: " << yes_no(c.bound_mn_holds) << '\n'
      << "bound_mn: n*k=" << c.n * c.k << " m=" << c.m << '\n'
      << "bound_23md_holds: " << yes_no(c.bound_23md_holds) << '\n'
      << "bound_23md: 3*d*k=" << 3 * c.d * c.k << " 2*m=" << 2 * c.m
      << (3 * c.d * c.k == 2 * c.m ? " (equality)" : "") << '\n'
      << "lemma2_identity_holds: " << yes_no(c.lemma2_identity_holds) << '\n'
      << "maximal: " << yes_no(c.maximal) << '\n'
      << "swap_stable: " << yes_no(c.swap_stable) << '\n'
      << "per_edge: " << c.per_edge.size() << '\n';
  for (const auto& e : c.per_edge) {
    const auto& s = e.stats;
    out << "edge: " << s.edge.u << ' ' << s.edge.v << " d_in_u=" << s.d_in_u
        << " d_in_v=" << s.d_in_v << " d_out_u=" << s.d_out_u << " d_out_v=" << s.d_out_v
        << " two_s=" << s.two_s << " claim4_ok=" << yes_no(e.claim4_ok)
        << " s_bound_ok=" << yes_no(e.s_bound_ok) << '\n';
  }
}

}  // namespace matchbound
