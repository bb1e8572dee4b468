#pragma once

// Picard lattice of the plane blown up at nine points.
//
// A class is stored as a column vector (h, e1, ..., e9) meaning
// h*H + e1*E1 + ... + e9*E9. The intersection form is diag(1, -1, ..., -1).
// Curves "aH - sum b_i E_i" therefore have e_i = -b_i.

#include "hilbnef/rational.hpp"

#include <Eigen/Dense>

#include <compare>
#include <string>
#include <string_view>

namespace hilbnef {

inline constexpr int kRank = 10;

template <typename Scalar>
using DivisorT = Eigen::Matrix<Scalar, kRank, 1>;
template <typename Scalar>
using LatticeMatrixT = Eigen::Matrix<Scalar, kRank, kRank>;

using Divisor = DivisorT<Rational>;
using IntDivisor = DivisorT<long long>;

namespace lattice {

template <typename Scalar = Rational>
DivisorT<Scalar> H() {
  DivisorT<Scalar> d = DivisorT<Scalar>::Zero();
  d(0) = Scalar(1);
  return d;
}

/// Exceptional class E_i, i in 1..9.
template <typename Scalar = Rational>
DivisorT<Scalar> E(int i) {
  DivisorT<Scalar> d = DivisorT<Scalar>::Zero();
  d(i) = Scalar(1);
  return d;
}

/// K = -3H + E1 + ... + E9.
template <typename Scalar = Rational>
DivisorT<Scalar> K() {
  DivisorT<Scalar> d = DivisorT<Scalar>::Ones();
  d(0) = Scalar(-3);
  return d;
}

/// Fiber class F = -K.
template <typename Scalar = Rational>
DivisorT<Scalar> F() {
  return -K<Scalar>();
}

template <typename Scalar = Rational>
LatticeMatrixT<Scalar> gram() {
  LatticeMatrixT<Scalar> g = -LatticeMatrixT<Scalar>::Identity();
  g(0, 0) = Scalar(1);
  return g;
}

}  // namespace lattice

/// Intersection pairing h1*h2 - sum e1_i*e2_i.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar intersect(const Eigen::MatrixBase<DerivedA>& a,
                                    const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Scalar acc = a(0) * b(0);
  for (int i = 1; i < kRank; ++i) acc -= a(i) * b(i);
  return acc;
}

template <typename Derived>
typename Derived::Scalar self_intersection(const Eigen::MatrixBase<Derived>& d) {
  return intersect(d, d);
}

template <typename Derived>
typename Derived::Scalar fiber_degree(const Eigen::MatrixBase<Derived>& d) {
  return intersect(d, lattice::F<typename Derived::Scalar>());
}

/// Adjunction: p_a(C) = 1 + (C.C + C.K) / 2.
template <typename Derived>
Rational arithmetic_genus(const Eigen::MatrixBase<Derived>& c) {
  const Rational cc(intersect(c, c));
  const Rational ck(intersect(c, lattice::K<typename Derived::Scalar>()));
  return 1 + (cc + ck) / 2;
}

template <typename Derived>
bool is_minus_one_class(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  return intersect(c, c) == Scalar(-1) && intersect(c, lattice::K<Scalar>()) == Scalar(-1);
}

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& d) {
  for (int i = 0; i < kRank; ++i)
    if (!is_integer(Rational(d(i)))) return false;
  return true;
}

/// Lexicographic order on (h, e1, ..., e9). Within a fixed degree this lists
/// the largest multiplicities b_i = -e_i first.
struct DivisorLess {
  template <typename Scalar>
  bool operator()(const DivisorT<Scalar>& a, const DivisorT<Scalar>& b) const {
    for (int i = 0; i < kRank; ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

/// Human-readable form such as "3H - 2E1 - E2".
std::string format_divisor(const Divisor& d);

/// Parses the human-readable form. Accepts terms in H, E1..E9, F and K with
/// optional rational coefficients ("1/2H", "3/2 F", "-E9"). Throws
/// std::invalid_argument on malformed input.
Divisor parse_divisor(std::string_view text);

}  // namespace hilbnef
