#include "hilbnef/weyl.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

using namespace hilbnef;

namespace {

// Brute force over integer vectors with h fixed and sum e_i^2 <= h^2 + 1.
void brute(int h, int i, std::array<int, 9>& e, int budget, std::vector<Divisor>& out) {
  if (i == 9) {
    Divisor c = Divisor::Zero();
    c(0) = h;
    for (int j = 0; j < 9; ++j) c(j + 1) = e[j];
    if (intersect(c, c) == -1 && intersect(c, lattice::K()) == -1) out.push_back(c);
    return;
  }
  for (int v = -3; v <= 3; ++v) {
    if (v * v > budget) continue;
    e[i] = v;
    brute(h, i + 1, e, budget - v * v, out);
  }
  e[i] = 0;
}

std::vector<Divisor> brute_minus_one(int max_h) {
  std::vector<Divisor> out;
  for (int h = 0; h <= max_h; ++h) {
    std::array<int, 9> e{};
    brute(h, 0, e, h * h + 1, out);
  }
  std::sort(out.begin(), out.end(), DivisorLess{});
  return out;
}

Divisor random_divisor(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  Divisor x;
  for (int i = 0; i < kRank; ++i) x(i) = d(rng);
  return x;
}

}  // namespace

TEST_CASE("root basis") {
  const auto roots = weyl::root_basis();
  REQUIRE(roots.size() == 9);
  CHECK(roots[0].cls() == Divisor(lattice::E(1) - lattice::E(2)));
  CHECK(roots[7].cls() == Divisor(lattice::E(8) - lattice::E(9)));
  CHECK(roots[8].cls() == Divisor(lattice::H() - lattice::E(1) - lattice::E(2) - lattice::E(3)));
  for (const Root& r : roots) {
    CHECK(self_intersection(r.cls()) == -2);
    CHECK(fiber_degree(r.cls()) == 0);
  }
  CHECK_THROWS_AS(Root(lattice::E(1)), std::invalid_argument);
  CHECK_THROWS_AS(Root(Divisor(lattice::H() - lattice::E(1) - lattice::E(2))), std::invalid_argument);
}

TEST_CASE("reflection examples") {
  const Root b(lattice::E(1) - lattice::E(2));
  CHECK(weyl::reflect(b, lattice::E(1)) == lattice::E(2));
  CHECK(weyl::reflect(b, lattice::E(3)) == lattice::E(3));
  const Root c(lattice::H() - lattice::E(1) - lattice::E(2) - lattice::E(3));
  CHECK(weyl::reflect(c, lattice::E(1)) == Divisor(lattice::H() - lattice::E(2) - lattice::E(3)));
  CHECK(weyl::reflect(c, lattice::H()) == Divisor(2 * lattice::H() - lattice::E(1) - lattice::E(2) - lattice::E(3)));
  for (const Root& r : weyl::root_basis()) {
    CHECK(weyl::reflect(r, lattice::F()) == lattice::F());
    CHECK(weyl::reflect(r, r.cls()) == Divisor(-r.cls()));
    CHECK(weyl::reflection_map(r)(lattice::H()) == weyl::reflect(r, lattice::H()));
  }
}

TEST_CASE("reflections are isometric involutions (1000 trials)") {
  std::mt19937_64 rng(2024);
  const auto roots = weyl::root_basis();
  for (int trial = 0; trial < 1000; ++trial) {
    const Root& r = roots[rng() % roots.size()];
    const Divisor a = random_divisor(rng), b = random_divisor(rng);
    const Divisor ra = weyl::reflect(r, a), rb = weyl::reflect(r, b);
    CHECK(intersect(ra, rb) == intersect(a, b));
    CHECK(weyl::reflect(r, ra) == a);
    CHECK(fiber_degree(ra) == fiber_degree(a));
  }
  for (const Root& r : roots) {
    const LatticeMap m = weyl::reflection_map(r);
    CHECK(m.is_isometry());
    CHECK(m.is_integral());
    CHECK(m.then(m).matrix == LatticeMatrixT<Rational>::Identity());
  }
}

TEST_CASE("(-1)-class enumeration against brute force") {
  const auto brute3 = brute_minus_one(3);
  const auto counts = weyl::count_by_degree(brute3);
  CHECK(counts.at(0) == 9);
  CHECK(counts.at(1) == 36);
  CHECK(counts.at(2) == 126);
  CHECK(counts.at(3) == 252);
  const std::array<std::size_t, 4> cumulative{9, 45, 171, 423};
  for (int d = 0; d <= 3; ++d) {
    const auto e = weyl::enumerate_minus_one_classes(d);
    CHECK(e.size() == cumulative[d]);
    CHECK(e == brute_minus_one(d));
  }
  CHECK(weyl::enumerate_minus_one_classes(0).front() == lattice::E(9));
  CHECK_THROWS_AS(weyl::enumerate_minus_one_classes(-1), std::invalid_argument);
}

TEST_CASE("every enumerated class is an integral (-1)-class of fiber degree 1") {
  for (const Divisor& c : weyl::enumerate_minus_one_classes(4)) {
    CHECK(is_integral(c));
    CHECK(is_minus_one_class(c));
    CHECK(fiber_degree(c) == 1);
    CHECK(arithmetic_genus(c) == 0);
  }
}

TEST_CASE("orbit of E9 equals the enumeration") {
  for (int d = 0; d <= 3; ++d) CHECK(weyl::weyl_orbit(lattice::E(9), d) == weyl::enumerate_minus_one_classes(d));
  const auto e0 = weyl::weyl_orbit(lattice::E(9), 0);
  CHECK(std::set<Divisor, DivisorLess>(e0.begin(), e0.end()).size() == 9);
}

TEST_CASE("orbit of F is F") {
  for (int d = 0; d <= 3; ++d) {
    const auto orbit = weyl::weyl_orbit(lattice::F(), d);
    if (d < 3) {
      CHECK(orbit.empty());
    } else {
      REQUIRE(orbit.size() == 1);
      CHECK(orbit[0] == lattice::F());
    }
  }
  const auto orbit = weyl::weyl_orbit(lattice::F(), 6);
  REQUIRE(orbit.size() == 1);
  CHECK(orbit[0] == lattice::F());
}

TEST_CASE("nef orbits are classified by (D.D, D.F)") {
  CHECK(weyl::classify_nef_extremal(lattice::F()) == weyl::NefOrbit::Fiber);
  CHECK(weyl::classify_nef_extremal(Divisor(2 * lattice::F())) == weyl::NefOrbit::Fiber);
  CHECK(weyl::classify_nef_extremal(lattice::H()) == weyl::NefOrbit::H);
  CHECK(weyl::classify_nef_extremal(Divisor(lattice::H() - lattice::E(1))) == weyl::NefOrbit::HMinusE1);
  CHECK(weyl::classify_nef_extremal(lattice::E(1)) == weyl::NefOrbit::NotExtremalNef);

  std::mt19937_64 rng(5);
  const auto roots = weyl::root_basis();
  for (int trial = 0; trial < 200; ++trial) {
    Divisor h = lattice::H();
    Divisor g = lattice::H() - lattice::E(1);
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int k = 0; k < len; ++k) {
      const Root& r = roots[rng() % roots.size()];
      h = weyl::reflect(r, h);
      g = weyl::reflect(r, g);
    }
    CHECK(weyl::classify_nef_extremal(h) == weyl::NefOrbit::H);
    CHECK(weyl::classify_nef_extremal(g) == weyl::NefOrbit::HMinusE1);
  }
  for (const Divisor& c : weyl::weyl_orbit(lattice::H(), 3))
    CHECK(weyl::classify_nef_extremal(c) == weyl::NefOrbit::H);
}
