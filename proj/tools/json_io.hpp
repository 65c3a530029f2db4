#pragma once

#include <json.hpp>

#include "surfcoh/conv.hpp"
#include "surfcoh/series.hpp"
#include "surfcoh/verify.hpp"

// JSON encodings of the engine values, used by the CLI's --format json and
// by the round-trip tests.  Coefficients and multiplicities are decimal
// strings so that values of any size survive every JSON parser.
namespace surfcoh::jsonio {

// Insertion-ordered objects keep the emitted bytes deterministic.
using Json = nlohmann::ordered_json;

// Sorted [[degree, coefficient-as-decimal-string], ...].
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {"transient": <poly>, "pattern": [4 strings], "direction": +-1,
//  "tail_start": integer} in canonical form.
Json series_to_json(const PeriodicSeries& s);
PeriodicSeries series_from_json(const Json& j);

// [[atom-tag, index, shift, multiplicity-string], ...] with tags
// "I", "C", "U", "E".
Json object_to_json(const SheafObject& o);
SheafObject object_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

}  // namespace surfcoh::jsonio
