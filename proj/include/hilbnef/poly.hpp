#pragma once

// Polynomials in two variables (s, T) with exact rational coefficients.
// Used as an Eigen scalar so the stability-condition formulas can be
// evaluated symbolically in s and T = t^2.

#include "hilbnef/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <stdexcept>
#include <utility>

namespace hilbnef {

class BiPoly {
 public:
  using Exponent = std::pair<int, int>;  // (degree in s, degree in T)

  BiPoly() = default;
  BiPoly(const Rational& c) { add_term({0, 0}, c); }  // NOLINT(implicit)
  BiPoly(int c) : BiPoly(Rational(c)) {}              // NOLINT(implicit)
  BiPoly(long long c) : BiPoly(Rational(c)) {}        // NOLINT(implicit)

  static BiPoly s() { return monomial(1, 0); }
  static BiPoly T() { return monomial(0, 1); }
  static BiPoly monomial(int s_deg, int t_deg, const Rational& c = 1) {
    BiPoly p;
    p.add_term({s_deg, t_deg}, c);
    return p;
  }

  Rational coeff(int s_deg, int t_deg) const {
    auto it = terms_.find({s_deg, t_deg});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly& operator/=(const BiPoly& o);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) { return BiPoly() - a; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
  }
  /// Division by a constant polynomial only; throws std::domain_error otherwise.
  friend BiPoly operator/(BiPoly a, const BiPoly& b) { return a /= b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponent, Rational> terms_;
};

inline BiPoly& BiPoly::operator/=(const BiPoly& o) {
  if (o.terms_.size() != 1 || !o.terms_.contains({0, 0}))
    throw std::domain_error("BiPoly: division by a non-constant polynomial");
  const Rational c = o.terms_.begin()->second;
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

}  // namespace hilbnef

namespace Eigen {
template <>
struct NumTraits<hilbnef::BiPoly> : GenericNumTraits<hilbnef::BiPoly> {
  using Real = hilbnef::BiPoly;
  using NonInteger = hilbnef::BiPoly;
  using Nested = hilbnef::BiPoly;
  using Literal = hilbnef::BiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 20,
    MulCost = 40
  };
};
}  // namespace Eigen
