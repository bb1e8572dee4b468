#include "hilbnef/hilb.hpp"

#include "hilbnef/parallel.hpp"
#include "hilbnef/weyl.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace hilbnef::hilb {

namespace {

void require_n(int n, int min_n) {
  if (n < min_n) throw std::invalid_argument("n must be >= " + std::to_string(min_n));
}

// B-pairing of C_[n] in units of B/2: (2g - 2 + 2n) / 2.
Rational half_b_degree(const Divisor& c, int n) { return arithmetic_genus(c) - 1 + n; }

// Fast exact pairing for the duality scan: a divisor scaled to integers by a
// positive common denominator, a curve as an integer functional on
// (surf, b_half). Entries are bounded so every product fits in 128 bits.
constexpr long long kSmall = 1LL << 31;
using Coords = std::array<long long, kRank + 1>;

struct ScaledDivisor {
  Coords num{};
  long long den = 1;
  bool small = false;
};

bool to_small(const Integer& z, long long& out) {
  if (z >= kSmall || z <= -kSmall) return false;
  out = z.convert_to<long long>();
  return true;
}

ScaledDivisor scale(const HilbDivisor& d) {
  ScaledDivisor out;
  Integer lcm = denominator(d.b_half);
  for (int i = 0; i < kRank; ++i) lcm = boost::multiprecision::lcm(lcm, denominator(d.surf(i)));
  if (!to_small(lcm, out.den)) return out;
  for (int i = 0; i <= kRank; ++i) {
    const Rational& q = i < kRank ? d.surf(i) : d.b_half;
    if (!to_small(numerator(q) * (lcm / denominator(q)), out.num[i])) return out;
  }
  out.small = true;
  return out;
}

std::optional<Coords> functional(const HilbCurve& c, int n) {
  Coords w{};
  if (std::holds_alternative<ContractedCurve>(c)) {
    w[kRank] = -1;
    return w;
  }
  const Divisor& cc = std::get<InducedCurve>(c).c;
  const Rational k = half_b_degree(cc, n);
  if (!is_integral(cc) || !is_integer(k)) return std::nullopt;
  for (int i = 0; i < kRank; ++i) {
    const Rational g = i == 0 ? cc(i) : Rational(-cc(i));
    if (!to_small(numerator(g), w[i])) return std::nullopt;
  }
  if (!to_small(numerator(k), w[kRank])) return std::nullopt;
  return w;
}

}  // namespace

HilbDivisor fiber_boundary_class(int n) { return {Rational(n - 1) * lattice::F(), -1}; }

std::string curve_label(const HilbCurve& c) {
  if (std::holds_alternative<ContractedCurve>(c)) return "C0";
  return "(" + format_divisor(std::get<InducedCurve>(c).c) + ")_[n]";
}

std::string divisor_label(const HilbDivisor& d) {
  std::string s = "(" + format_divisor(d.surf) + ")^[n]";
  if (d.b_half != 0) s += " + (" + to_string(d.b_half) + ")B/2";
  return s;
}

Rational pair_hilb(const HilbDivisor& d, const HilbCurve& c, int n) {
  require_n(n, 2);
  if (std::holds_alternative<ContractedCurve>(c)) return -d.b_half;
  const Divisor& cc = std::get<InducedCurve>(c).c;
  return intersect(cc, d.surf) + d.b_half * half_b_degree(cc, n);
}

HilbDivisor epsilon(const Divisor& c, int n) {
  require_n(n, 3);
  const Rational cf = fiber_degree(c);
  if (cf == 0) throw std::invalid_argument("epsilon: C.F = 0, the ray is F^[n] itself");
  const Rational x = Rational(n) / cf;
  return lift(x * c) + fiber_boundary_class(n);
}

LambdaCertificate lambda_membership(const HilbDivisor& d, int n, int max_h_degree) {
  require_n(n, 3);
  LambdaCertificate cert;
  cert.c0_pairing = pair_hilb(d, ContractedCurve{}, n);
  cert.fiber_pairing = pair_hilb(d, InducedCurve{lattice::F()}, n);
  const auto curves = weyl::enumerate_minus_one_classes(max_h_degree);
  const auto values = parallel_map(curves, [&](const Divisor& e) { return pair_hilb(d, InducedCurve{e}, n); });
  cert.minus_one_pairings.reserve(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    cert.minus_one_pairings.push_back({curves[i], values[i]});
    if (!cert.minus_one_witness && values[i] < 0) cert.minus_one_witness = cert.minus_one_pairings.back();
  }
  return cert;
}

HilbDivisor LambdaDecomposition::recompose(int n) const { return lift(nef_part) + t * fiber_boundary_class(n); }

LambdaDecomposition lambda_decompose(const HilbDivisor& d, int n, int max_h_degree) {
  require_n(n, 3);
  if (d.b_half > 0)
    throw std::invalid_argument("not in Lambda: positive B/2 coefficient gives C0 pairing " +
                                to_string(-d.b_half));
  LambdaDecomposition out;
  out.t = -d.b_half;
  out.nef_part = d.surf - out.t * Rational(n - 1) * lattice::F();
  // (C - t(n-1)F).F = C.F and (C - t(n-1)F).E = D.E_[n]: exactly the two
  // checks a nef scan against F and the (-1)-classes performs.
  out.nef_check = surface::is_nef_up_to_degree(out.nef_part, max_h_degree);
  return out;
}

std::vector<NefGenerator> nef_generators(int n, int max_h_degree) {
  std::vector<NefGenerator> gens;
  gens.push_back({"F^[n]", lift(lattice::F()), false});
  for (const Divisor& seed : {Divisor(lattice::H()), Divisor(lattice::H() - lattice::E(1))}) {
    for (const Divisor& c : weyl::weyl_orbit(seed, max_h_degree)) {
      const std::string name = format_divisor(c);
      gens.push_back({"(" + name + ")^[n]", lift(c), false});
      gens.push_back({"eps(" + name + ")", epsilon(c, n), true});
    }
  }
  return gens;
}

std::vector<LabeledCurve> curve_generators(int max_h_degree) {
  std::vector<LabeledCurve> curves;
  curves.push_back({"C0", ContractedCurve{}});
  curves.push_back({"F_[n]", InducedCurve{lattice::F()}});
  for (const Divisor& e : weyl::enumerate_minus_one_classes(max_h_degree))
    curves.push_back({"(" + format_divisor(e) + ")_[n]", InducedCurve{e}});
  return curves;
}

TheoremReport theorem1_check(int n, int max_h_degree) {
  require_n(n, 3);
  TheoremReport report;
  report.n = n;
  report.max_h_degree = max_h_degree;

  const auto nefs = nef_generators(n, max_h_degree);
  const auto curves = curve_generators(max_h_degree);
  report.nef_generator_count = nefs.size();
  report.curve_generator_count = curves.size();
  report.minus_one_class_count = curves.size() - 2;
  report.pairings_checked = nefs.size() * curves.size();

  struct CurveScan {
    CurveSummary summary;
    std::vector<PairingViolation> negatives;
  };
  std::vector<ScaledDivisor> scaled;
  scaled.reserve(nefs.size());
  bool all_small = true;
  for (const NefGenerator& g : nefs) {
    scaled.push_back(scale(g.cls));
    all_small = all_small && scaled.back().small;
  }

  const auto scans = parallel_map(curves, [&](const LabeledCurve& lc) {
    CurveScan scan;
    scan.summary.curve = lc.label;
    const auto w = all_small ? functional(lc.curve, n) : std::nullopt;
    if (!w) {
      bool first = true;
      for (const NefGenerator& g : nefs) {
        const Rational v = pair_hilb(g.cls, lc.curve, n);
        if (first || v < scan.summary.min_pairing) {
          scan.summary.min_pairing = v;
          scan.summary.min_divisor = g.label;
          first = false;
        }
        if (v < 0) scan.negatives.push_back({g.label, lc.label, v});
        if (v == 0 && !scan.summary.orthogonal_witness) scan.summary.orthogonal_witness = g.label;
      }
      return scan;
    }
    std::size_t best = 0;
    __int128 best_num = 0;
    __int128 best_den = 1;
    for (std::size_t k = 0; k < nefs.size(); ++k) {
      const ScaledDivisor& sd = scaled[k];
      __int128 num = 0;
      for (int i = 0; i <= kRank; ++i) num += static_cast<__int128>((*w)[i]) * sd.num[i];
      if (k == 0 || num * best_den < best_num * sd.den) {
        best = k;
        best_num = num;
        best_den = sd.den;
      }
      if (num < 0) scan.negatives.push_back({nefs[k].label, lc.label, pair_hilb(nefs[k].cls, lc.curve, n)});
      if (num == 0 && !scan.summary.orthogonal_witness) scan.summary.orthogonal_witness = nefs[k].label;
    }
    if (!nefs.empty()) {
      scan.summary.min_pairing = pair_hilb(nefs[best].cls, lc.curve, n);
      scan.summary.min_divisor = nefs[best].label;
    }
    return scan;
  });

  for (const CurveScan& scan : scans) {
    report.negative_pairings.insert(report.negative_pairings.end(), scan.negatives.begin(), scan.negatives.end());
    if (!scan.summary.orthogonal_witness) report.curves_without_witness.push_back(scan.summary.curve);
    report.curves.push_back(scan.summary);
  }

  const HilbCurve fiber_curve = InducedCurve{lattice::F()};
  for (const NefGenerator& g : nefs) {
    if (!g.is_epsilon) continue;
    const Rational v = pair_hilb(g.cls, fiber_curve, n);
    if (v != 0) report.epsilon_not_fiber_orthogonal.push_back({g.label, "F_[n]", v});
  }

  report.notes.push_back("The second nefness argument concerns eps(H-E1); the text's eps(H-E2) is read as a typo.");
  return report;
}

}  // namespace hilbnef::hilb
