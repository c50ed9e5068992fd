#include "run_report.hpp"

#include <json.hpp>
#include <ostream>

#include "matchbound/certificate_io.hpp"

namespace matchbound::cli {

RunReport make_report(std::string source, std::string algorithm, const Matching& matching,
                      std::int64_t wall_time_us) {
  RunReport r;
  r.source = std::move(source);
  r.algorithm = std::move(algorithm);
  r.n = matching.graph().vertex_count();
  r.m = matching.graph().edge_count();
  r.d = matching.graph().max_degree();
  r.k = matching.size();
  r.matching.assign(matching.edges().begin(), matching.edges().end());
  r.certificate = certify(matching);
  r.wall_time_us = wall_time_us;
  return r;
}

std::string report_to_json(const RunReport& report) {
  using Json = nlohmann::ordered_json;
  Json doc;
  doc["source"] = report.source;
  doc["algorithm"] = report.algorithm;
  doc["graph"] = {{"n", report.n}, {"m", report.m}, {"d", report.d}};
  doc["k"] = report.k;
  Json edges = Json::array();
  for (const Edge& e : report.matching) edges.push_back({e.u, e.v});
  doc["matching"] = std::move(edges);
  doc["certificate"] = Json::parse(certificate_to_json(report.certificate));
  doc["passed"] = report.certificate.in_hypothesis_checks_pass();
  doc["wall_time_us"] = report.wall_time_us;
  return doc.dump(2);
}

void write_report_text(std::ostream& out, const RunReport& report) {
  out << "source: " << report.source << '\n' << "algorithm: " << report.algorithm << '\n';
  write_certificate_text(out, report.certificate);
  for (const Edge& e : report.matching) out << "matched: " << e.u << ' ' << e.v << '\n';
  out << "passed: " << (report.certificate.in_hypothesis_checks_pass() ? "true" : "false")
      << '\n'
      << "wall_time_us: " << report.wall_time_us << '\n';
}

}  // namespace matchbound::cli
