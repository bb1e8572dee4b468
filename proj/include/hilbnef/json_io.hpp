#pragma once

// JSON encoding shared by the CLI and the reports. Rationals are always
// "p/q" strings; a divisor is {"h": "p/q", "e": ["p/q", x9]}.

#include "hilbnef/lattice.hpp"

#include <json.hpp>

namespace hilbnef {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json divisor_to_json(const Divisor& d);
/// Accepts the object form or a string in the format_divisor syntax.
Divisor divisor_from_json(const Json& j);

}  // namespace hilbnef
