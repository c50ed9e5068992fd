#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "matchbound/bounds.hpp"

namespace matchbound {

// JSON document whose field names mirror BoundCertificate exactly:
//   n, m, d, k, bound_mn_holds, bound_23md_holds, lemma2_identity_holds,
//   per_edge[{edge:[u,v], d_in_u, d_in_v, d_out_u, d_out_v, two_s,
//             claim4_ok, s_bound_ok}], maximal, swap_stable
// Keys are emitted in that order. indent < 0 gives a single line.
std::string certificate_to_json(const BoundCertificate& c, int indent = -1);

// Inverse of certificate_to_json. Throws SyntaxError on malformed documents.
BoundCertificate certificate_from_json(std::string_view text);

// "key: value" lines, one "edge:" line per matched edge.
void write_certificate_text(std::ostream& out, const BoundCertificate& c);

}  // namespace matchbound
