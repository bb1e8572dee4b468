#include "hilbnef/weyl.hpp"

#include "hilbnef/parallel.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace hilbnef {

Root::Root(Divisor cls) : cls_(std::move(cls)) {
  if (self_intersection(cls_) != -2 || fiber_degree(cls_) != 0)
    throw std::invalid_argument("not a root: " + format_divisor(cls_));
}

bool LatticeMap::is_isometry() const {
  const LatticeMatrixT<Rational> g = lattice::gram();
  return matrix.transpose() * g * matrix == g;
}

bool LatticeMap::is_integral() const {
  for (int r = 0; r < kRank; ++r)
    for (int c = 0; c < kRank; ++c)
      if (!is_integer(matrix(r, c))) return false;
  return true;
}

namespace weyl {

std::vector<Root> root_basis() {
  std::vector<Root> roots;
  roots.reserve(9);
  for (int i = 1; i <= 8; ++i) roots.emplace_back(lattice::E(i) - lattice::E(i + 1));
  roots.emplace_back(lattice::H() - lattice::E(1) - lattice::E(2) - lattice::E(3));
  return roots;
}

LatticeMap reflection_map(const Root& beta) {
  const Divisor& b = beta.cls();
  // column j is s_beta(basis_j) = basis_j + (basis_j . beta) beta
  return {LatticeMatrixT<Rational>::Identity() + b * (lattice::gram() * b).transpose()};
}

namespace {

// Multiplicity vectors b (length 9) with sum b = target_sum and
// sum b^2 = target_sq, entries in [-bound, bound].
void search_multiplicities(int index, long long sum_left, long long sq_left, long long bound,
                           std::array<long long, 9>& b, std::vector<std::array<long long, 9>>& out) {
  const long long slots = 9 - index;
  if (slots == 0) {
    if (sum_left == 0 && sq_left == 0) out.push_back(b);
    return;
  }
  // Cauchy-Schwarz and parity (b^2 = b mod 2) prune dead branches.
  if (sq_left < 0 || sum_left * sum_left > slots * sq_left) return;
  if ((sum_left - sq_left) % 2 != 0) return;
  for (long long v = bound; v >= -bound; --v) {
    if (v * v > sq_left) continue;
    b[index] = v;
    search_multiplicities(index + 1, sum_left - v, sq_left - v * v, bound, b, out);
  }
}

long long isqrt(long long x) {
  long long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::vector<Divisor> enumerate_minus_one_classes(int max_h_degree) {
  if (max_h_degree < 0) throw std::invalid_argument("max_h_degree must be >= 0");
  std::vector<Divisor> out;
  for (long long h = 0; h <= max_h_degree; ++h) {
    // C = hH - sum b_i E_i: C.C = h^2 - sum b^2 = -1, C.K = -3h + sum b = -1.
    const long long sum = 3 * h - 1;
    const long long sq = h * h + 1;
    std::vector<std::array<long long, 9>> found;
    std::array<long long, 9> b{};
    search_multiplicities(0, sum, sq, isqrt(sq), b, found);
    for (const auto& v : found) {
      IntDivisor c;
      c(0) = h;
      for (int i = 0; i < 9; ++i) c(i + 1) = -v[i];
      out.push_back(c.cast<Rational>());
    }
  }
  std::sort(out.begin(), out.end(), DivisorLess{});
  return out;
}

std::vector<Divisor> weyl_orbit(const Divisor& start, int max_h_degree) {
  if (max_h_degree < 0) throw std::invalid_argument("max_h_degree must be >= 0");
  constexpr int kSlack = 3;  // largest h-shift of one basis reflection
  const Rational lo(-kSlack);
  const Rational hi(max_h_degree + kSlack);

  const std::vector<Root> roots = root_basis();
  std::set<Divisor, DivisorLess> seen{start};
  std::vector<Divisor> frontier{start};
  while (!frontier.empty()) {
    const auto images = parallel_map(frontier, [&](const Divisor& d) {
      std::vector<Divisor> next;
      next.reserve(roots.size());
      for (const Root& r : roots) {
        Divisor img = reflect(r, d);
        if (img(0) >= lo && img(0) <= hi) next.push_back(std::move(img));
      }
      return next;
    });
    std::set<Divisor, DivisorLess> fresh;
    for (const auto& batch : images)
      for (const auto& d : batch)
        if (!seen.contains(d)) fresh.insert(d);
    seen.insert(fresh.begin(), fresh.end());
    frontier.assign(fresh.begin(), fresh.end());
  }

  std::vector<Divisor> out;
  for (const Divisor& d : seen)
    if (d(0) >= 0 && d(0) <= max_h_degree) out.push_back(d);
  return out;
}

std::map<long long, std::size_t> count_by_degree(const std::vector<Divisor>& classes) {
  std::map<long long, std::size_t> counts;
  for (const Divisor& d : classes) ++counts[static_cast<long long>(numerator(d(0)))];
  return counts;
}

const char* to_string(NefOrbit orbit) {
  switch (orbit) {
    case NefOrbit::Fiber: return "FiberOrbit";
    case NefOrbit::H: return "HOrbit";
    case NefOrbit::HMinusE1: return "HminusE1Orbit";
    case NefOrbit::NotExtremalNef: return "NotExtremalNef";
  }
  return "NotExtremalNef";
}

NefOrbit classify_nef_extremal(const Divisor& d) {
  const Rational dd = self_intersection(d);
  const Rational df = fiber_degree(d);
  if (dd == 0 && df == 0) {
    // Hodge index: a nonzero class with D.D = D.F = 0 is a multiple of F.
    const Rational k = -d(1);
    if (k > 0 && d == k * lattice::F()) return NefOrbit::Fiber;
    return NefOrbit::NotExtremalNef;
  }
  if (dd == 1 && df == 3) return NefOrbit::H;
  if (dd == 0 && df == 2) return NefOrbit::HMinusE1;
  return NefOrbit::NotExtremalNef;
}

}  // namespace weyl
}  // namespace hilbnef
