#pragma once

// Translations by sections of the elliptic fibration, realized on the Picard
// lattice, and the translation-reduction experiment on nef classes of X^[n].

#include "hilbnef/hilb.hpp"
#include "hilbnef/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbnef::coneconj {

struct Translation {
  Divisor section;  // image of the zero section E1
  LatticeMap map;
};

/// x -> x + (x.F) v - [(x.v) + (v.v/2)(x.F)] F with v isotropic-orthogonal to F.
LatticeMap transvection(const Divisor& v);

/// Translation sending E1 to the section p, v = p - E1.
/// Throws std::invalid_argument unless p is a (-1)-class.
Translation translation(const Divisor& p);

/// Inverse translation: the transvection by -v.
Translation inverse(const Translation& t);

struct WeylConditions {
  bool integral = false;
  bool isometry = false;
  bool fixes_fiber = false;
  bool fixes_canonical = false;
  bool preserves_root_lattice = false;
  bool unimodular = false;  // det = +-1, so the inverse is integral
  Rational determinant;

  bool all() const {
    return integral && isometry && fixes_fiber && fixes_canonical && preserves_root_lattice && unimodular;
  }
};

/// Necessary conditions for membership in the Weyl group.
WeylConditions verify_weyl_necessary_conditions(const LatticeMap& m);
inline WeylConditions verify_weyl_necessary_conditions(const Translation& t) {
  return verify_weyl_necessary_conditions(t.map);
}

hilb::HilbDivisor translate_hilb(const LatticeMap& m, const hilb::HilbDivisor& d);
inline hilb::HilbDivisor translate_hilb(const Translation& t, const hilb::HilbDivisor& d) {
  return translate_hilb(t.map, d);
}

struct ReductionStep {
  Divisor section;
  Rational h_before;
  Rational h_after;
};

struct SampleReport {
  std::size_t index = 0;
  hilb::HilbDivisor original;
  hilb::HilbDivisor reduced;
  std::vector<ReductionStep> steps;
  std::optional<hilb::LambdaDecomposition> decomposition;
  bool stalled = false;  // no descent step and H-coefficient above threshold
  std::string error;

  bool ok() const { return !stalled && error.empty() && decomposition && decomposition->ok(); }
};

struct CoverageReport {
  int n = 0;
  int max_h_degree = 0;
  std::uint64_t seed = 0;
  Rational h_threshold;
  std::size_t generating_translations = 0;
  std::vector<SampleReport> samples;

  std::size_t successes() const;
};

/// Greedy height reduction of one class by the generating translations,
/// followed by its Lambda decomposition.
SampleReport reduce_and_decompose(const hilb::HilbDivisor& d, int n, int max_h_degree,
                                  const std::vector<Translation>& generators, const Rational& h_threshold);

/// Translations by all sections of degree <= 1 other than E1, and their inverses.
std::vector<Translation> generating_translations();

/// Samples random nonnegative integer combinations of certified nef generators
/// of X^[n] and reduces each by translations. Throws for n < 3.
CoverageReport coverage_experiment(int n, std::size_t samples, int max_h_degree, std::uint64_t seed,
                                   const Rational& h_threshold = 100);

}  // namespace hilbnef::coneconj
