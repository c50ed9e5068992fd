#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "matchbound/bounds.hpp"
#include "matchbound/matching.hpp"

namespace matchbound::cli {

// Everything `verify` prints. The certificate is recomputable from the graph
// and matching; wall_time_us is the only field that varies between runs.
struct RunReport {
  std::string source;     // input file path, or "stdin"
  std::string algorithm;  // greedy | stabilize | exact
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<Edge> matching;
  BoundCertificate certificate;
  std::int64_t wall_time_us = 0;
};

RunReport make_report(std::string source, std::string algorithm, const Matching& matching,
                      std::int64_t wall_time_us);

std::string report_to_json(const RunReport& report);
void write_report_text(std::ostream& out, const RunReport& report);

}  // namespace matchbound::cli
