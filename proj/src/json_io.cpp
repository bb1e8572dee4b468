#include "hilbnef/json_io.hpp"

#include <stdexcept>

namespace hilbnef {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("rational must be a \"p/q\" string");
}

Json divisor_to_json(const Divisor& d) {
  Json e = Json::array();
  for (int i = 1; i < kRank; ++i) e.push_back(rational_to_json(d(i)));
  return Json{{"h", rational_to_json(d(0))}, {"e", std::move(e)}};
}

Divisor divisor_from_json(const Json& j) {
  if (j.is_string()) return parse_divisor(j.get<std::string>());
  if (!j.is_object() || !j.contains("h") || !j.contains("e"))
    throw std::invalid_argument("divisor JSON needs keys \"h\" and \"e\"");
  const Json& e = j.at("e");
  if (!e.is_array() || e.size() != kRank - 1)
    throw std::invalid_argument("divisor JSON \"e\" must hold 9 rationals");
  Divisor d;
  d(0) = rational_from_json(j.at("h"));
  for (int i = 1; i < kRank; ++i) d(i) = rational_from_json(e[i - 1]);
  return d;
}

}  // namespace hilbnef
