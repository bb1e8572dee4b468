#pragma once

// Numerical Bridgeland data on an (A, P)-slice: twisted Chern characters,
// slopes, discriminants, central charges, numerical walls and the
// Gieseker-wall search for the ideal-sheaf character (1, 0, -n).

#include "hilbnef/hilb.hpp"
#include "hilbnef/lattice.hpp"
#include "hilbnef/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hilbnef::bridgeland {

/// (ch0, ch1, ch2). ch0 is integral for every character built here.
template <typename Scalar>
struct ChernCharT {
  Scalar r;
  DivisorT<Scalar> c1;
  Scalar ch2;

  template <typename Other>
  ChernCharT<Other> cast() const {
    return {Other(r), c1.template cast<Other>(), Other(ch2)};
  }
  friend bool operator==(const ChernCharT&, const ChernCharT&) = default;
};

using ChernChar = ChernCharT<Rational>;

/// ch(I_Z) for a length-n scheme: (1, 0, -n).
ChernChar ideal_sheaf(int n);
/// ch(L (x) I_Y) with length(Y) = m: (1, L, L.L/2 - m).
ChernChar line_bundle(const Divisor& l, int m = 0);

/// exp(-Q) ch = (r, c1 - rQ, ch2 - Q.c1 + r Q.Q / 2).
template <typename Scalar>
ChernCharT<Scalar> twist(const ChernCharT<Scalar>& ch, const DivisorT<Scalar>& q) {
  return {ch.r, ch.c1 - ch.r * q, ch.ch2 - intersect(q, ch.c1) + ch.r * intersect(q, q) / Scalar(2)};
}

enum class PaperSlice { A1, A2 };
const char* to_string(PaperSlice s);
PaperSlice parse_slice(const std::string& name);

/// Polarization A and twisting divisor P.
struct Slice {
  Divisor A;
  Divisor P;

  /// Throws std::invalid_argument unless A.A > 0 and A.F > 0.
  Slice(Divisor a, Divisor p);
};

/// (A1, -F) or (A2, -F) for the given n.
Slice make_slice(PaperSlice which, int n);

/// mu_{A,P}; empty means +infinity (ch0^P = 0).
std::optional<Rational> mu_ap(const Slice& sl, const ChernChar& ch);

/// Delta_{A,P} = mu^2/2 - ch2^P / (A.A ch0^P). Throws for rank 0.
Rational delta_ap(const Slice& sl, const ChernChar& ch);

struct ComplexValue {
  Rational re;
  Rational im;
  friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

/// Z_{s,t} = -ch2^{P+sA} + (t^2 A.A / 2) ch0^{P+sA} + i A.ch1^{P+sA}.
/// Generic in the scalar so it can be evaluated on polynomials in (s, t^2).
template <typename Scalar>
std::pair<Scalar, Scalar> central_charge_generic(const Slice& sl, const Scalar& s, const Scalar& t_sq,
                                                 const ChernCharT<Scalar>& ch) {
  const DivisorT<Scalar> a = sl.A.template cast<Scalar>();
  const DivisorT<Scalar> shift = sl.P.template cast<Scalar>() + s * a;
  const ChernCharT<Scalar> tw = twist(ch, shift);
  const Scalar a_sq = intersect(a, a);
  return {-tw.ch2 + t_sq * a_sq / Scalar(2) * tw.r, intersect(a, tw.c1)};
}

/// Throws std::invalid_argument for t_sq <= 0.
ComplexValue central_charge(const Slice& sl, const Rational& s, const Rational& t_sq, const ChernChar& ch);

/// Semicircle (s - center)^2 + t^2 = radius_sq; empty when radius_sq <= 0.
struct Wall {
  Rational center;
  Rational radius_sq;

  bool nonempty() const { return radius_sq > 0; }
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Equal slopes: the wall is the vertical line s = mu.
struct VerticalWall {
  Rational s;
};

/// The equal-slope locus is not a circle (line, empty or higher degree).
struct DegenerateLocus {
  std::string reason;
};

/// Exact containment of the closed half-disk of inner in that of outer.
bool contains(const Wall& outer, const Wall& inner);

/// Center and radius from slopes and discriminants:
/// s0 = (mu_E + mu_F)/2 - (Delta_E - Delta_F)/(mu_E - mu_F),
/// rho^2 = (mu_E - s0)^2 - 2 Delta_E.
/// Throws std::invalid_argument when a slope is infinite.
std::variant<Wall, VerticalWall> numerical_wall(const Slice& sl, const ChernChar& e, const ChernChar& f);

/// Independent route: expands Re Z(E) Im Z(F) - Re Z(F) Im Z(E) as a
/// polynomial in (s, t^2) and reads off the circle.
std::variant<Wall, DegenerateLocus> wall_oracle(const Slice& sl, const ChernChar& e, const ChernChar& f);

/// Rank-one special case as printed next to the general formula:
/// (n - m + L.L/2 - L.P/2) / (-L.A). Diagnostic only; it disagrees with the
/// general formula, which expands to (n - m + L.L/2 - L.P) / (L.A).
Rational printed_rank_one_center(const Slice& sl, const Divisor& l, int m, int n);

/// Reason a rank-one candidate O(L) -> I_Z was discarded, or Survivor.
enum class Filter {
  Survivor,
  MultiplicityExceedsDegree,  // some b_i > a: pairs negatively with the nef class H - E_i
  FiberOrthogonalNonFiber,    // (-L).F = 0 but -L is not a multiple of F
  FiberDegreeAtLeastTwo,      // (-L).F >= 2 forces (-L).A > n
  ADegreeBound,               // (-L).A >= A.F = n
  LineCount,                  // A2 slice: a = b_1 lines through p_1 meet at most a further points
};
const char* to_string(Filter f);

struct Rank1Candidate {
  Divisor minus_l;  // the effective class -L
  Rational fiber_degree;
  Rational a_degree;
  Filter filter = Filter::Survivor;
  std::variant<Wall, DegenerateLocus> wall;
  /// Survivors only: wall of L (x) I_Y with length(Y) = 1, which must lie
  /// strictly inside the wall of L itself.
  std::optional<std::variant<Wall, DegenerateLocus>> wall_with_point;
};

/// Enumerates E_1..E_9 and every aH - sum b_i E_i with 1 <= a <= max_h_degree,
/// b_i >= 0, sum b_i <= 3a, records its wall against I_Z and the first filter
/// that discards it. Throws for n < 3.
std::vector<Rank1Candidate> rank1_candidates(PaperSlice which, int n, int max_h_degree);

/// (2n A.A + (A.(-F))^2 - A.A F.F) / (8 (A.A)^2): radius^2 bound for walls
/// of destabilizers of rank >= 2.
Rational rank2_radius_bound(const Slice& sl, int n);

struct GiesekerCertificate {
  PaperSlice slice = PaperSlice::A1;
  int n = 0;
  int max_h_degree = 0;
  Wall fiber_wall;  // W(O(-F), I_Z)
  std::vector<Rank1Candidate> candidates;
  Rational rank2_bound;
  std::vector<std::string> violations;

  std::size_t survivor_count() const;
  bool certified() const { return violations.empty(); }
};

/// Runs the full search and records violations without throwing.
GiesekerCertificate scan_gieseker_wall(PaperSlice which, int n, int max_h_degree = 3);

struct GiesekerWallViolation : std::runtime_error {
  explicit GiesekerWallViolation(GiesekerCertificate cert);
  GiesekerCertificate certificate;
};

/// Same as scan_gieseker_wall but throws GiesekerWallViolation when the
/// fiber wall is not certified as the largest wall.
GiesekerCertificate gieseker_wall(PaperSlice which, int n, int max_h_degree = 3);

/// K/2 ^[n] - s_W A^[n] - P^[n] - B/2.
hilb::HilbDivisor nef_from_wall(const Slice& sl, const Rational& s_w);

}  // namespace hilbnef::bridgeland
