#include "hilbnef/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hilbnef {

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size())
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const Integer p = parse_integer(trim(s.substr(0, slash)), text);
  const Integer q = parse_integer(trim(s.substr(slash + 1)), text);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

}  // namespace hilbnef
