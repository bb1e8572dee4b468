#include "hilbnef/coneconj.hpp"

#include "hilbnef/parallel.hpp"

#include <random>
#include <stdexcept>

namespace hilbnef::coneconj {

LatticeMap transvection(const Divisor& v) {
  const Divisor f = lattice::F();
  const Rational half_v_sq = self_intersection(v) / 2;
  LatticeMap m;
  for (int j = 0; j < kRank; ++j) {
    const Divisor x = Divisor::Unit(j);
    const Rational xf = intersect(x, f);
    m.matrix.col(j) = x + xf * v - (intersect(x, v) + half_v_sq * xf) * f;
  }
  return m;
}

Translation translation(const Divisor& p) {
  if (!is_integral(p) || !is_minus_one_class(p))
    throw std::invalid_argument("translation: " + format_divisor(p) + " is not a (-1)-class");
  return {p, transvection(p - lattice::E(1))};
}

Translation inverse(const Translation& t) {
  const LatticeMap m = transvection(-(t.section - lattice::E(1)));
  return {m(lattice::E(1)), m};
}

WeylConditions verify_weyl_necessary_conditions(const LatticeMap& m) {
  WeylConditions out;
  out.integral = m.is_integral();
  out.isometry = m.is_isometry();
  out.fixes_fiber = m(lattice::F()) == lattice::F();
  out.fixes_canonical = m(lattice::K()) == lattice::K();
  out.preserves_root_lattice = true;
  for (const Root& r : weyl::root_basis()) {
    const Divisor img = m(r.cls());
    if (!is_integral(img) || fiber_degree(img) != 0) out.preserves_root_lattice = false;
  }
  out.determinant = m.matrix.determinant();
  out.unimodular = out.determinant == 1 || out.determinant == -1;
  return out;
}

hilb::HilbDivisor translate_hilb(const LatticeMap& m, const hilb::HilbDivisor& d) { return {m(d.surf), d.b_half}; }

std::size_t CoverageReport::successes() const {
  std::size_t k = 0;
  for (const auto& s : samples) k += s.ok() ? 1 : 0;
  return k;
}

std::vector<Translation> generating_translations() {
  std::vector<Translation> gens;
  for (const Divisor& p : weyl::enumerate_minus_one_classes(1)) {
    if (p == lattice::E(1)) continue;
    Translation t = translation(p);
    Translation inv = inverse(t);
    gens.push_back(std::move(t));
    gens.push_back(std::move(inv));
  }
  return gens;
}

SampleReport reduce_and_decompose(const hilb::HilbDivisor& d, int n, int max_h_degree,
                                  const std::vector<Translation>& generators, const Rational& h_threshold) {
  constexpr int kMaxSteps = 10000;
  SampleReport rep;
  rep.original = d;
  hilb::HilbDivisor current = d;
  for (int step = 0; step < kMaxSteps; ++step) {
    const Translation* best = nullptr;
    Divisor best_image;
    for (const Translation& t : generators) {
      Divisor img = t.map(current.surf);
      if (img(0) < (best ? best_image(0) : current.surf(0))) {
        best = &t;
        best_image = std::move(img);
      }
    }
    if (!best) break;
    rep.steps.push_back({best->section, current.surf(0), best_image(0)});
    current.surf = best_image;
  }
  rep.reduced = current;

  try {
    auto dec = hilb::lambda_decompose(current, n, max_h_degree);
    rep.stalled = dec.nef_part(0) > h_threshold;
    rep.decomposition = std::move(dec);
  } catch (const std::invalid_argument& e) {
    rep.error = e.what();
  }
  return rep;
}

CoverageReport coverage_experiment(int n, std::size_t samples, int max_h_degree, std::uint64_t seed,
                                   const Rational& h_threshold) {
  if (n < 3) throw std::invalid_argument("coverage_experiment: n must be >= 3");
  CoverageReport report;
  report.n = n;
  report.max_h_degree = max_h_degree;
  report.seed = seed;
  report.h_threshold = h_threshold;

  const auto pool = hilb::nef_generators(n, max_h_degree);
  const auto gens = generating_translations();
  report.generating_translations = gens.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> coef(1, 5);
  std::vector<hilb::HilbDivisor> draws;
  draws.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    hilb::HilbDivisor d;
    const int k = terms(rng);
    for (int j = 0; j < k; ++j) {
      const auto& g = pool[pick(rng)];
      d = d + Rational(coef(rng)) * g.cls;
    }
    draws.push_back(std::move(d));
  }

  report.samples = parallel_map(draws, [&](const hilb::HilbDivisor& d) {
    return reduce_and_decompose(d, n, max_h_degree, gens, h_threshold);
  });
  for (std::size_t i = 0; i < report.samples.size(); ++i) report.samples[i].index = i;
  return report;
}

}  // namespace hilbnef::coneconj
