#pragma once

// JSON and CSV encodings shared by the command-line tool and the tests.
//
//   path         {"n": 4, "k": 2, "supports": [[1,2],[1,3],...]}
//   step         {"x": 2, "y": 3, "Z": [1]}
//   lattice path {"n": 4, "k": 2, "points": [[2,1],[3,1],...]}
//   certificate  {"coherent": true, "omega": ["-1/1", "1/2", ...]}
//
// Rationals are "p/q" strings in lowest terms. "omega" is omitted for a
// non-coherent path.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "mpp/coherence.hpp"
#include "mpp/hypersimplex.hpp"
#include "mpp/lattice.hpp"

namespace mpp::io {

using Json = nlohmann::json;

Json to_json(const RationalVector& values);
RationalVector rationals_from_json(const Json& j);

Json to_json(const MonotonePath& path);
MonotonePath path_from_json(const Json& j);

Json to_json(const EnhancedStep& step);
EnhancedStep step_from_json(const Json& j);

Json to_json(const LatticePath& path);
LatticePath lattice_from_json(const Json& j);

Json to_json(const CoherenceCertificate& certificate);
CoherenceCertificate certificate_from_json(const Json& j);

// Compact label, {1,3,4} -> "134". For n > 9 the elements are comma separated.
std::string support_label(const Support& support);

// One CSV row; fields containing a comma or quote are quoted.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace mpp::io
