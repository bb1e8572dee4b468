#include "hilbnef/bridgeland.hpp"

#include "hilbnef/parallel.hpp"
#include "hilbnef/surface.hpp"

#include <algorithm>
#include <array>

namespace hilbnef::bridgeland {

using hilbnef::to_string;

ChernChar ideal_sheaf(int n) { return {1, Divisor::Zero(), Rational(-n)}; }

ChernChar line_bundle(const Divisor& l, int m) { return {1, l, self_intersection(l) / 2 - m}; }

const char* to_string(PaperSlice s) { return s == PaperSlice::A1 ? "A1" : "A2"; }

PaperSlice parse_slice(const std::string& name) {
  if (name == "A1") return PaperSlice::A1;
  if (name == "A2") return PaperSlice::A2;
  throw std::invalid_argument("unknown slice '" + name + "' (expected A1 or A2)");
}

Slice::Slice(Divisor a, Divisor p) : A(std::move(a)), P(std::move(p)) {
  if (self_intersection(A) <= 0 || fiber_degree(A) <= 0)
    throw std::invalid_argument("slice polarization needs A.A > 0 and A.F > 0");
}

Slice make_slice(PaperSlice which, int n) {
  const Divisor a = which == PaperSlice::A1 ? surface::polarization_a1(n) : surface::polarization_a2(n);
  return Slice(a, -lattice::F());
}

std::optional<Rational> mu_ap(const Slice& sl, const ChernChar& ch) {
  const ChernChar tw = twist(ch, sl.P);
  if (tw.r == 0) return std::nullopt;
  return intersect(sl.A, tw.c1) / (self_intersection(sl.A) * tw.r);
}

Rational delta_ap(const Slice& sl, const ChernChar& ch) {
  const ChernChar tw = twist(ch, sl.P);
  if (tw.r == 0) throw std::invalid_argument("delta_ap: rank-zero character");
  const Rational mu = *mu_ap(sl, ch);
  return mu * mu / 2 - tw.ch2 / (self_intersection(sl.A) * tw.r);
}

ComplexValue central_charge(const Slice& sl, const Rational& s, const Rational& t_sq, const ChernChar& ch) {
  if (t_sq <= 0) throw std::invalid_argument("central_charge: t^2 must be positive");
  auto [re, im] = central_charge_generic<Rational>(sl, s, t_sq, ch);
  return {re, im};
}

bool contains(const Wall& outer, const Wall& inner) {
  if (!inner.nonempty()) return true;
  if (!outer.nonempty()) return false;
  // rho_o >= rho_i + |d|  <=>  X >= 0 and X^2 >= 4 d^2 rho_i^2, X = rho_o^2 - rho_i^2 - d^2
  const Rational d = outer.center - inner.center;
  const Rational x = outer.radius_sq - inner.radius_sq - d * d;
  return x >= 0 && x * x >= 4 * d * d * inner.radius_sq;
}

std::variant<Wall, VerticalWall> numerical_wall(const Slice& sl, const ChernChar& e, const ChernChar& f) {
  const auto mu_e = mu_ap(sl, e);
  const auto mu_f = mu_ap(sl, f);
  if (!mu_e || !mu_f) throw std::invalid_argument("numerical_wall: infinite slope");
  if (*mu_e == *mu_f) return VerticalWall{*mu_e};
  const Rational delta_e = delta_ap(sl, e);
  const Rational delta_f = delta_ap(sl, f);
  const Rational center = (*mu_e + *mu_f) / 2 - (delta_e - delta_f) / (*mu_e - *mu_f);
  const Rational offset = *mu_e - center;
  return Wall{center, offset * offset - 2 * delta_e};
}

namespace {

// Slice data as polynomials in (s, T = t^2), built once per slice.
struct SymbolicSlice {
  Divisor a;
  DivisorT<BiPoly> shift;  // P + sA
  BiPoly shift_sq_half;
  BiPoly a_dot_shift;
  BiPoly t_sq_a_sq_half;

  explicit SymbolicSlice(const Slice& sl) : a(sl.A) {
    const BiPoly s = BiPoly::s();
    shift = sl.P.cast<BiPoly>() + s * sl.A.cast<BiPoly>();
    shift_sq_half = intersect(shift, shift) / BiPoly(2);
    a_dot_shift = intersect(sl.A.cast<BiPoly>(), shift);
    t_sq_a_sq_half = BiPoly::T() * BiPoly(self_intersection(sl.A) / 2);
  }

  // Z = -ch2^{P+sA} + (t^2 A^2 / 2) r + i A.c1^{P+sA}
  std::pair<BiPoly, BiPoly> charge(const ChernChar& ch) const {
    BiPoly shift_dot_c1;
    for (int i = 0; i < kRank; ++i) {
      if (ch.c1(i) == 0) continue;
      const BiPoly term = shift(i) * BiPoly(ch.c1(i));
      if (i == 0) shift_dot_c1 += term;
      else shift_dot_c1 -= term;
    }
    const BiPoly r(ch.r);
    const BiPoly tw_ch2 = BiPoly(ch.ch2) - shift_dot_c1 + r * shift_sq_half;
    const BiPoly re = -tw_ch2 + r * t_sq_a_sq_half;
    const BiPoly im = BiPoly(intersect(a, ch.c1)) - r * a_dot_shift;
    return {re, im};
  }
};

std::variant<Wall, DegenerateLocus> wall_from_charges(const std::pair<BiPoly, BiPoly>& ze,
                                                      const std::pair<BiPoly, BiPoly>& zf) {
  const BiPoly locus = ze.first * zf.second - zf.first * ze.second;

  for (const auto& [exp, c] : locus.terms()) {
    const bool circle_term = exp == BiPoly::Exponent{2, 0} || exp == BiPoly::Exponent{0, 1} ||
                             exp == BiPoly::Exponent{1, 0} || exp == BiPoly::Exponent{0, 0};
    if (!circle_term)
      return DegenerateLocus{"unexpected monomial s^" + std::to_string(exp.first) + " T^" +
                             std::to_string(exp.second)};
  }
  const Rational k = locus.coeff(0, 1);
  if (locus.coeff(2, 0) != k) return DegenerateLocus{"s^2 and t^2 coefficients differ"};
  if (k == 0) return DegenerateLocus{"equal slopes: no circular wall"};
  const Rational center = -locus.coeff(1, 0) / (2 * k);
  return Wall{center, center * center - locus.coeff(0, 0) / k};
}

}  // namespace

std::variant<Wall, DegenerateLocus> wall_oracle(const Slice& sl, const ChernChar& e, const ChernChar& f) {
  const SymbolicSlice sym(sl);
  return wall_from_charges(sym.charge(e), sym.charge(f));
}

Rational printed_rank_one_center(const Slice& sl, const Divisor& l, int m, int n) {
  return (Rational(n - m) + self_intersection(l) / 2 - intersect(l, sl.P) / 2) / (-intersect(l, sl.A));
}

const char* to_string(Filter f) {
  switch (f) {
    case Filter::Survivor: return "survivor";
    case Filter::MultiplicityExceedsDegree: return "multiplicity_exceeds_degree";
    case Filter::FiberOrthogonalNonFiber: return "fiber_orthogonal_non_fiber";
    case Filter::FiberDegreeAtLeastTwo: return "fiber_degree_at_least_two";
    case Filter::ADegreeBound: return "a_degree_bound";
    case Filter::LineCount: return "line_count";
  }
  return "survivor";
}

namespace {

void compositions(int index, int budget, std::array<int, 9>& b, std::vector<std::array<int, 9>>& out) {
  if (index == 9) {
    out.push_back(b);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    b[index] = v;
    compositions(index + 1, budget - v, b, out);
  }
  b[index] = 0;
}

Filter classify(PaperSlice which, int n, const Divisor& x, const Rational& fiber_deg, const Rational& a_deg) {
  if (x(0) == 0) return Filter::Survivor;  // E_i, handled directly
  const Rational a = x(0);
  Rational rest_mult = 0;  // sum_{i >= 2} b_i
  for (int i = 1; i < kRank; ++i) {
    if (-x(i) > a) return Filter::MultiplicityExceedsDegree;
    if (i >= 2) rest_mult += -x(i);
  }
  if (fiber_deg >= 2) return Filter::FiberDegreeAtLeastTwo;
  if (fiber_deg == 0) {
    const Rational k = a / 3;
    return x == k * lattice::F() ? Filter::Survivor : Filter::FiberOrthogonalNonFiber;
  }
  if (a_deg >= n) return Filter::ADegreeBound;
  if (which == PaperSlice::A2 && -x(1) == a && rest_mult > a) return Filter::LineCount;
  return Filter::Survivor;
}

}  // namespace

std::vector<Rank1Candidate> rank1_candidates(PaperSlice which, int n, int max_h_degree) {
  if (n < 3) throw std::invalid_argument("rank1_candidates: n must be >= 3");
  if (max_h_degree < 0) throw std::invalid_argument("rank1_candidates: negative degree bound");
  const Slice sl = make_slice(which, n);

  // (h, e1..e9) as integers; sorted before conversion to rationals
  std::vector<std::array<int, kRank>> keys;
  for (int i = 1; i <= 9; ++i) {
    std::array<int, kRank> k{};
    k[i] = 1;
    keys.push_back(k);
  }
  for (int a = 1; a <= max_h_degree; ++a) {
    std::vector<std::array<int, 9>> bs;
    std::array<int, 9> b{};
    compositions(0, 3 * a, b, bs);
    for (const auto& v : bs) {
      std::array<int, kRank> k{};
      k[0] = a;
      for (int i = 0; i < 9; ++i) k[i + 1] = -v[i];
      keys.push_back(k);
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Divisor> shapes;
  shapes.reserve(keys.size());
  for (const auto& k : keys) {
    Divisor x;
    for (int i = 0; i < kRank; ++i) x(i) = k[i];
    shapes.push_back(std::move(x));
  }

  const SymbolicSlice sym(sl);
  const auto z_ideal = sym.charge(ideal_sheaf(n));
  return parallel_map(shapes, [&](const Divisor& x) {
    Rank1Candidate c;
    c.minus_l = x;
    c.fiber_degree = fiber_degree(x);
    c.a_degree = intersect(x, sl.A);
    c.filter = classify(which, n, x, c.fiber_degree, c.a_degree);
    c.wall = wall_from_charges(sym.charge(line_bundle(-x)), z_ideal);
    if (c.filter == Filter::Survivor) c.wall_with_point = wall_from_charges(sym.charge(line_bundle(-x, 1)), z_ideal);
    return c;
  });
}

Rational rank2_radius_bound(const Slice& sl, int n) {
  const Rational a_sq = self_intersection(sl.A);
  const Rational a_dot_mf = intersect(sl.A, Divisor(-lattice::F()));
  const Rational f_sq = self_intersection(lattice::F());
  return (2 * n * a_sq + a_dot_mf * a_dot_mf - a_sq * f_sq) / (8 * a_sq * a_sq);
}

std::size_t GiesekerCertificate::survivor_count() const {
  return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(),
                                                [](const Rank1Candidate& c) { return c.filter == Filter::Survivor; }));
}

GiesekerCertificate scan_gieseker_wall(PaperSlice which, int n, int max_h_degree) {
  const Slice sl = make_slice(which, n);
  GiesekerCertificate cert;
  cert.slice = which;
  cert.n = n;
  cert.max_h_degree = max_h_degree;

  const auto fiber = wall_oracle(sl, line_bundle(-lattice::F()), ideal_sheaf(n));
  if (const auto* w = std::get_if<Wall>(&fiber)) {
    cert.fiber_wall = *w;
    if (w->center != -1) cert.violations.push_back("fiber wall center is " + to_string(w->center) + ", not -1");
  } else {
    cert.violations.push_back("fiber wall is degenerate: " + std::get<DegenerateLocus>(fiber).reason);
  }

  cert.candidates = rank1_candidates(which, n, max_h_degree);
  for (const Rank1Candidate& c : cert.candidates) {
    const std::string name = format_divisor(c.minus_l);
    if (c.filter == Filter::FiberDegreeAtLeastTwo && c.a_degree < n)
      cert.violations.push_back(name + ": fiber degree >= 2 but (-L).A = " + to_string(c.a_degree) + " < n");
    if (c.filter != Filter::Survivor) continue;
    const auto* w = std::get_if<Wall>(&c.wall);
    if (!w) {
      cert.violations.push_back(name + ": degenerate wall for a surviving candidate");
      continue;
    }
    if (w->nonempty() && w->center < -1)
      cert.violations.push_back(name + ": wall center " + to_string(w->center) + " < -1");
    const auto* wp = c.wall_with_point ? std::get_if<Wall>(&*c.wall_with_point) : nullptr;
    if (w->nonempty() && (!wp || wp->center <= w->center))
      cert.violations.push_back(name + ": twisting by a point ideal does not shrink the wall");
  }

  cert.rank2_bound = rank2_radius_bound(sl, n);
  if (!(cert.rank2_bound < cert.fiber_wall.radius_sq))
    cert.violations.push_back("rank >= 2 radius bound " + to_string(cert.rank2_bound) +
                              " does not beat the fiber wall radius^2");
  return cert;
}

GiesekerWallViolation::GiesekerWallViolation(GiesekerCertificate cert)
    : std::runtime_error("Gieseker wall not certified for slice " + std::string(to_string(cert.slice)) +
                         ", n = " + std::to_string(cert.n) + ": " + cert.violations.front()),
      certificate(std::move(cert)) {}

GiesekerCertificate gieseker_wall(PaperSlice which, int n, int max_h_degree) {
  GiesekerCertificate cert = scan_gieseker_wall(which, n, max_h_degree);
  if (!cert.certified()) throw GiesekerWallViolation(std::move(cert));
  return cert;
}

hilb::HilbDivisor nef_from_wall(const Slice& sl, const Rational& s_w) {
  return {lattice::K() / Rational(2) - s_w * sl.A - sl.P, -1};
}

}  // namespace hilbnef::bridgeland
