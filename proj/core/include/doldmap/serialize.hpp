#ifndef DOLDMAP_SERIALIZE_HPP
#define DOLDMAP_SERIALIZE_HPP

#include "doldmap/dold.hpp"
#include "doldmap/index.hpp"
#include "doldmap/map.hpp"
#include "doldmap/orbit.hpp"
#include "doldmap/words.hpp"

#include <string>

namespace doldmap {

// Comma-separated k:a_k pairs, e.g. "1:-1,2:3,5:-2". Whitespace is ignored,
// the empty string is the empty coefficient map, explicit zeros are dropped,
// duplicate periods are rejected.
DoldCoefficients parse_coefficient_literal(const std::string& text);
std::string format_coefficient_literal(const DoldCoefficients& coeffs);

// Comma-separated integers, e.g. "1,-5,1,-5".
IndexSequence parse_index_literal(const std::string& text);
std::string format_index_literal(const IndexSequence& seq);

// JSON emitters. All payloads carry "schema": 1 and are deterministic for a
// given input (no timestamps, fixed key order).
std::string index_report_to_json(const IndexReport& report);
std::string map_to_json(const SkewProductMap& map);
std::string separation_report_to_json(const SeparationReport& report);
std::string escape_report_to_json(const EscapeReport& report);
std::string stream_family_to_json(const std::map<int, std::vector<PeriodicStream>>& family);

// Rebuilds a map from map_to_json output; re-serializing the result is
// byte-identical to the input dump.
SkewProductMap map_from_json(const std::string& text);

}  // namespace doldmap

#endif
