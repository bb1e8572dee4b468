#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace hilbnef {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator. Expression templates are off so the type behaves as a plain
/// value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Rational frac(long long p, long long q) { return Rational(p, q); }

/// Canonical "p/q" form, always with an explicit denominator ("3/1", "-1/2").
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" and surrounding whitespace; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace hilbnef
