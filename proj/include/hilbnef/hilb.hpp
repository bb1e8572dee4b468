#pragma once

// Neron-Severi model of the Hilbert scheme X^[n]: divisors D^[n] + b (B/2),
// the curves C_0 and C_[n], the cone Lambda and the classes eps(C).

#include "hilbnef/lattice.hpp"
#include "hilbnef/surface.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hilbnef::hilb {

/// surf^[n] + b_half * (B/2). The exceptional divisor B itself has b_half = 2.
struct HilbDivisor {
  Divisor surf = Divisor::Zero();
  Rational b_half;

  friend bool operator==(const HilbDivisor&, const HilbDivisor&) = default;
  friend HilbDivisor operator+(const HilbDivisor& a, const HilbDivisor& b) {
    return {a.surf + b.surf, a.b_half + b.b_half};
  }
  friend HilbDivisor operator*(const Rational& k, const HilbDivisor& d) { return {k * d.surf, k * d.b_half}; }
};

inline HilbDivisor lift(const Divisor& d) { return {d, 0}; }
inline HilbDivisor exceptional_b() { return {Divisor::Zero(), 2}; }

/// (n-1) F^[n] - B/2.
HilbDivisor fiber_boundary_class(int n);

struct ContractedCurve {};  // C_0
struct InducedCurve {       // C_[n]
  Divisor c;
};
using HilbCurve = std::variant<ContractedCurve, InducedCurve>;

std::string curve_label(const HilbCurve& c);
std::string divisor_label(const HilbDivisor& d);

/// C_0.D^[n] = 0, C_0.B = -2, C_[n].D^[n] = C.D, C_[n].B = 2g(C) - 2 + 2n.
/// Throws std::invalid_argument for n < 2.
Rational pair_hilb(const HilbDivisor& d, const HilbCurve& c, int n);

/// x C^[n] + (n-1) F^[n] - B/2 with x = n / (C.F), the F_[n]-orthogonal class
/// in the plane of C^[n] and (n-1)F^[n] - B/2. Throws for C.F == 0 or n < 3.
HilbDivisor epsilon(const Divisor& c, int n);

struct LambdaCertificate {
  Rational c0_pairing;
  Rational fiber_pairing;  // against F_[n]
  std::vector<surface::Pairing> minus_one_pairings;
  std::optional<surface::Pairing> minus_one_witness;  // first negative E_[n]

  bool c0_ok() const { return c0_pairing >= 0; }
  bool fiber_ok() const { return fiber_pairing >= 0; }
  bool minus_one_ok() const { return !minus_one_witness.has_value(); }
  bool member() const { return c0_ok() && fiber_ok() && minus_one_ok(); }
};

LambdaCertificate lambda_membership(const HilbDivisor& d, int n, int max_h_degree);

/// D = nef_part^[n] + t ((n-1)F^[n] - B/2), t = -b_half.
struct LambdaDecomposition {
  Divisor nef_part;
  Rational t;
  surface::NefCertificate nef_check;

  bool ok() const { return nef_check.nef_up_to_bound(); }
  HilbDivisor recompose(int n) const;
};

/// Throws std::invalid_argument when b_half > 0 (negative pairing with C_0).
/// A failed nef check is reported through nef_check.witness.
LambdaDecomposition lambda_decompose(const HilbDivisor& d, int n, int max_h_degree = 3);

struct NefGenerator {
  std::string label;
  HilbDivisor cls;
  bool is_epsilon = false;
};

/// F^[n], C^[n] and eps(C) for C in the Weyl orbits of H and H - E1 up to the
/// degree bound.
std::vector<NefGenerator> nef_generators(int n, int max_h_degree);

struct LabeledCurve {
  std::string label;
  HilbCurve curve;
};

/// C_0, F_[n] and E_[n] for every (-1)-class up to the bound.
std::vector<LabeledCurve> curve_generators(int max_h_degree);

struct PairingViolation {
  std::string divisor;
  std::string curve;
  Rational value;
};

struct CurveSummary {
  std::string curve;
  Rational min_pairing;
  std::string min_divisor;
  std::optional<std::string> orthogonal_witness;  // nef generator with pairing 0
};

struct TheoremReport {
  int n = 0;
  int max_h_degree = 0;
  std::size_t nef_generator_count = 0;
  std::size_t curve_generator_count = 0;
  std::size_t minus_one_class_count = 0;
  std::size_t pairings_checked = 0;
  std::vector<PairingViolation> negative_pairings;
  std::vector<std::string> curves_without_witness;
  std::vector<PairingViolation> epsilon_not_fiber_orthogonal;
  std::vector<CurveSummary> curves;
  std::vector<std::string> notes;

  bool ok() const {
    return negative_pairings.empty() && curves_without_witness.empty() && epsilon_not_fiber_orthogonal.empty();
  }
};

/// Exhaustive exact duality scan between the candidate nef generators and the
/// candidate curve generators of X^[n]. Throws for n < 3.
TheoremReport theorem1_check(int n, int max_h_degree);

}  // namespace hilbnef::hilb
