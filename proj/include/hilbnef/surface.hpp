#pragma once

// Mori and nef cone tests on the rational elliptic surface.

#include "hilbnef/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbnef::surface {

/// F followed by every (-1)-class of h-degree <= max_h_degree.
std::vector<Divisor> mori_generators(int max_h_degree);

struct Pairing {
  Divisor curve;
  Rational value;
};

struct NefCertificate {
  std::vector<Pairing> checked;
  int degree_bound = 0;
  /// First generator (in enumeration order) with negative pairing, if any.
  std::optional<Pairing> witness;

  bool nef_up_to_bound() const { return !witness.has_value(); }
};

NefCertificate is_nef_up_to_degree(const Divisor& d, int max_h_degree);

/// Exact ampleness decision for D = c_h H + c_hme1 (H - E1) + c_f F over all
/// (-1)-curves, not just enumerated ones.
struct AmpleDecision {
  bool ample = false;
  Rational dot_fiber;       // D.F
  Rational dot_e1;          // D.E1
  Rational dot_ei;          // D.E_i, i >= 2
  /// Infimum of D.E over (-1)-curves E = aH - sum b_i E_i with a >= 1;
  /// empty when that infimum is -infinity.
  std::optional<Rational> min_higher;
  Rational self_intersection;
  std::vector<std::string> trace;
};

/// Throws std::invalid_argument unless at most one of c_h, c_hme1 is nonzero.
AmpleDecision is_ample_hf_family(const Rational& c_h, const Rational& c_hme1, const Rational& c_f);

/// A1 = (n/3) H + (n - 3/2) F.
Divisor polarization_a1(int n);
/// A2 = (n/2)(H - E1) + (n - 3/2) F.
Divisor polarization_a2(int n);

AmpleDecision ample_a1(int n);
AmpleDecision ample_a2(int n);

inline Rational self_intersection_report(const Divisor& d) { return self_intersection(d); }

}  // namespace hilbnef::surface
