#include "hilbnef/lattice.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hilbnef {

namespace {

void append_term(std::string& out, const Rational& c, const std::string& name) {
  if (c == 0) return;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1) {
    out += is_integer(mag) ? numerator(mag).str() : "(" + to_string(mag) + ")";
  }
  out += name;
}

}  // namespace

std::string format_divisor(const Divisor& d) {
  std::string out;
  append_term(out, d(0), "H");
  for (int i = 1; i < kRank; ++i) append_term(out, d(i), "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

Divisor parse_divisor(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty divisor expression");
  if (s == "0") return Divisor::Zero();

  Divisor result = Divisor::Zero();
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;

    const std::size_t coef_start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' ||
                              s[pos] == '(' || s[pos] == ')'))
      ++pos;
    std::string coef_text = s.substr(coef_start, pos - coef_start);
    std::erase(coef_text, '(');
    std::erase(coef_text, ')');
    Rational coef = coef_text.empty() ? Rational(1) : parse_rational(coef_text);
    if (sign < 0) coef = -coef;

    if (pos >= s.size()) throw std::invalid_argument("missing generator in '" + std::string(text) + "'");
    const char gen = s[pos++];
    Divisor term;
    switch (gen) {
      case 'H': term = lattice::H(); break;
      case 'F': term = lattice::F(); break;
      case 'K': term = lattice::K(); break;
      case 'E': {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
          throw std::invalid_argument("E needs an index 1..9 in '" + std::string(text) + "'");
        const int idx = s[pos++] - '0';
        if (idx < 1 || idx > 9) throw std::invalid_argument("E index out of range in '" + std::string(text) + "'");
        term = lattice::E(idx);
        break;
      }
      default:
        throw std::invalid_argument("unknown generator '" + std::string(1, gen) + "' in '" +
                                    std::string(text) + "'");
    }
    result += coef * term;
  }
  return result;
}

}  // namespace hilbnef
