#pragma once

// Roots orthogonal to the fiber class, the reflections they generate, and
// the Weyl orbits of (-1)-classes and nef extremal rays.

#include "hilbnef/lattice.hpp"

#include <map>
#include <vector>

namespace hilbnef {

/// A class with r.r = -2 and r.F = 0.
class Root {
 public:
  /// Throws std::invalid_argument when cls is not a root.
  explicit Root(Divisor cls);
  const Divisor& cls() const { return cls_; }

 private:
  Divisor cls_;
};

/// Linear map on Picard coordinates, acting on column vectors.
struct LatticeMap {
  LatticeMatrixT<Rational> matrix = LatticeMatrixT<Rational>::Identity();

  Divisor operator()(const Divisor& d) const { return matrix * d; }
  LatticeMap then(const LatticeMap& next) const { return {next.matrix * matrix}; }

  /// M^T G M == G.
  bool is_isometry() const;
  bool is_integral() const;
};

namespace weyl {

/// E1-E2, E2-E3, ..., E8-E9, H-E1-E2-E3 in that order.
std::vector<Root> root_basis();

/// s_beta(D) = D + (D.beta) beta.
template <typename Derived>
Divisor reflect(const Root& beta, const Eigen::MatrixBase<Derived>& d) {
  const Divisor dd = d.template cast<Rational>();
  return dd + intersect(dd, beta.cls()) * beta.cls();
}

LatticeMap reflection_map(const Root& beta);

/// All integral classes C with C.C = -1, C.K = -1 and 0 <= h(C) <= max_h_degree,
/// found by direct search over multiplicity vectors. Sorted by DivisorLess.
/// Throws std::invalid_argument for a negative bound.
std::vector<Divisor> enumerate_minus_one_classes(int max_h_degree);

/// Closure of {start} under the nine basis reflections, restricted to classes
/// with h in [0, max_h_degree]. Intermediate classes may leave the window by
/// up to 3 in either direction. Sorted by DivisorLess.
std::vector<Divisor> weyl_orbit(const Divisor& start, int max_h_degree);

/// Number of classes per h-degree.
std::map<long long, std::size_t> count_by_degree(const std::vector<Divisor>& classes);

enum class NefOrbit { Fiber, H, HMinusE1, NotExtremalNef };

const char* to_string(NefOrbit orbit);

/// Classifies by the Weyl-invariant pair (D.D, D.F):
/// positive multiples of F, (1, 3) for the orbit of H, (0, 2) for H - E1.
NefOrbit classify_nef_extremal(const Divisor& d);

}  // namespace weyl
}  // namespace hilbnef
