#include "hilbnef/bridgeland.hpp"
#include "hilbnef/surface.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hilbnef;
using namespace hilbnef::bridgeland;

namespace {

const Slice& slice(PaperSlice which, int n) {
  static std::map<std::pair<int, int>, Slice> cache;
  const auto key = std::make_pair(static_cast<int>(which), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_slice(which, n)).first;
  return it->second;
}

Wall oracle(const Slice& sl, const ChernChar& e, const ChernChar& f) {
  const auto w = wall_oracle(sl, e, f);
  REQUIRE(std::holds_alternative<Wall>(w));
  return std::get<Wall>(w);
}

Divisor random_divisor(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Divisor x;
  for (int i = 0; i < kRank; ++i) x(i) = d(rng);
  return x;
}

Rational random_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 6));
}

// Rank-one center from the slope/discriminant formula, expanded by hand:
// (n - m + L.L/2 - L.P) / (L.A).
Rational rank_one_center(const Slice& sl, const Divisor& l, int m, int n) {
  return (Rational(n - m) + self_intersection(l) / 2 - intersect(l, sl.P)) / intersect(l, sl.A);
}

}  // namespace

TEST_CASE("twists") {
  for (int n = 3; n <= 6; ++n) {
    const ChernChar t = twist(ideal_sheaf(n), Divisor(-lattice::F()));
    CHECK(t == ChernChar{1, lattice::F(), Rational(-n)});
  }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const ChernChar ch{Rational(static_cast<long long>(rng() % 4)), random_divisor(rng, -3, 3), random_rational(rng)};
    const Divisor q = random_divisor(rng, -2, 2);
    const Divisor q2 = random_divisor(rng, -2, 2);
    CHECK(twist(ch, Divisor(Divisor::Zero())) == ch);
    CHECK(twist(twist(ch, q), Divisor(-q)) == ch);
    CHECK(twist(twist(ch, q), q2) == twist(ch, Divisor(q + q2)));
  }
}

TEST_CASE("slices") {
  CHECK_THROWS_AS(Slice(lattice::E(1), Divisor(-lattice::F())), std::invalid_argument);
  CHECK_THROWS_AS(Slice(Divisor(-lattice::H()), Divisor(-lattice::F())), std::invalid_argument);
  CHECK(parse_slice("A2") == PaperSlice::A2);
  CHECK_THROWS_AS(parse_slice("A3"), std::invalid_argument);
}

TEST_CASE("slope and discriminant") {
  for (int n = 3; n <= 8; ++n) {
    const Slice& sl = slice(PaperSlice::A1, n);
    const Rational a_sq = self_intersection(sl.A);
    const Rational mu = Rational(n) / a_sq;
    CHECK(*mu_ap(sl, ideal_sheaf(n)) == mu);
    CHECK(delta_ap(sl, ideal_sheaf(n)) == mu * mu / 2 + mu);
    const ChernChar of = line_bundle(Divisor(-lattice::F()));
    CHECK(*mu_ap(sl, of) == 0);
    CHECK(delta_ap(sl, of) == 0);
    const ChernChar oe = line_bundle(Divisor(-lattice::E(4)));
    const Rational mu_e = *mu_ap(sl, oe);
    CHECK(mu_e == Rational(3, 2) / a_sq);
    CHECK(delta_ap(sl, oe) == mu_e * mu_e / 2 + Rational(3, 2) / a_sq);
  }
  const ChernChar torsion{0, lattice::F(), 1};
  CHECK_FALSE(mu_ap(slice(PaperSlice::A1, 3), torsion).has_value());
  CHECK_THROWS_AS(delta_ap(slice(PaperSlice::A1, 3), torsion), std::invalid_argument);
}

TEST_CASE("central charge") {
  const Slice& s1 = slice(PaperSlice::A1, 3);
  const auto z = central_charge(s1, -1, 1, ideal_sheaf(3));
  CHECK(z.re == 0);
  const ChernChar point{0, Divisor::Zero(), 1};
  for (const Rational s : {Rational(-2), Rational(1, 3), Rational(5)}) {
    const auto zp = central_charge(s1, s, Rational(7, 2), point);
    CHECK(zp.im == 0);
    CHECK(zp.re == -1);
  }
  const ChernChar of = line_bundle(Divisor(-lattice::F()));
  for (const Rational t_sq : {Rational(1, 4), Rational(1), Rational(9)}) {
    const auto zf = central_charge(s1, 0, t_sq, of);
    CHECK(zf.re == t_sq * self_intersection(s1.A) / 2);
    CHECK(zf.im == 0);
  }
  CHECK_THROWS_AS(central_charge(s1, 0, 0, of), std::invalid_argument);
}

TEST_CASE("fiber wall") {
  for (int n = 3; n <= 12; ++n) {
    for (const PaperSlice which : {PaperSlice::A1, PaperSlice::A2}) {
      const Slice& sl = slice(which, n);
      const ChernChar of = line_bundle(Divisor(-lattice::F()));
      const Wall w = oracle(sl, of, ideal_sheaf(n));
      CHECK(w.center == -1);
      CHECK(w.radius_sq == 1);
      const auto nw = numerical_wall(sl, of, ideal_sheaf(n));
      REQUIRE(std::holds_alternative<Wall>(nw));
      CHECK(std::get<Wall>(nw) == w);
    }
  }
}

TEST_CASE("rank-one wall centers") {
  for (int n = 3; n <= 12; ++n) {
    const Rational q(n);
    const Slice& s1 = slice(PaperSlice::A1, n);
    const Slice& s2 = slice(PaperSlice::A2, n);
    const ChernChar iz = ideal_sheaf(n);
    for (int i = 1; i <= 9; ++i) {
      const Wall w = oracle(s1, line_bundle(Divisor(-lattice::E(i))), iz);
      CHECK(w.center == -1);
      CHECK(w.radius_sq == 1);
    }
    CHECK(oracle(s2, line_bundle(Divisor(-lattice::E(1))), iz).center == -(2 * q - 3) / (3 * (q - 1)));
    CHECK(oracle(s2, line_bundle(Divisor(-lattice::E(5))), iz).center == -1);
    const Divisor hij = lattice::H() - lattice::E(2) - lattice::E(7);
    const Wall wh = oracle(s1, line_bundle(Divisor(-hij)), iz);
    CHECK(wh.center == -(q - Rational(3, 2)) / (Rational(4, 3) * q - Rational(3, 2)));
    CHECK(wh.center > -1);
    CHECK(oracle(s2, line_bundle(Divisor(lattice::E(1) + lattice::E(3) - lattice::H())), iz).center == -1);
  }
}

TEST_CASE("oracle and slope formula agree on random pairs") {
  std::mt19937_64 rng(314);
  for (const PaperSlice which : {PaperSlice::A1, PaperSlice::A2}) {
    int agreed = 0;
    while (agreed < 100) {
      const int n = 3 + static_cast<int>(rng() % 10);
      const Slice& sl = slice(which, n);
      const ChernChar e = line_bundle(random_divisor(rng, -4, 4), static_cast<int>(rng() % 4));
      const ChernChar f = rng() % 2 ? ideal_sheaf(n) : ChernChar{1, random_divisor(rng, -3, 3), random_rational(rng)};
      const auto nw = numerical_wall(sl, e, f);
      const auto ow = wall_oracle(sl, e, f);
      if (std::holds_alternative<VerticalWall>(nw)) {
        CHECK(std::holds_alternative<DegenerateLocus>(ow));
        continue;
      }
      REQUIRE(std::holds_alternative<Wall>(ow));
      CHECK(std::get<Wall>(ow) == std::get<Wall>(nw));
      const Divisor l = e.c1;
      if (f == ideal_sheaf(n) && intersect(l, sl.A) != 0) {
        const int m = static_cast<int>(self_intersection(l) / 2 - e.ch2);
        CHECK(std::get<Wall>(ow).center == rank_one_center(sl, l, m, n));
      }
      ++agreed;
    }
  }
}

TEST_CASE("oracle and slope formula agree for higher rank") {
  std::mt19937_64 rng(2718);
  int agreed = 0;
  while (agreed < 50) {
    const Slice& sl = slice(rng() % 2 ? PaperSlice::A1 : PaperSlice::A2, 3 + static_cast<int>(rng() % 5));
    const ChernChar e{Rational(1 + static_cast<long long>(rng() % 3)), random_divisor(rng, -3, 3), random_rational(rng)};
    const ChernChar f{Rational(1 + static_cast<long long>(rng() % 3)), random_divisor(rng, -3, 3), random_rational(rng)};
    const auto nw = numerical_wall(sl, e, f);
    if (!std::holds_alternative<Wall>(nw)) continue;
    const auto ow = wall_oracle(sl, e, f);
    REQUIRE(std::holds_alternative<Wall>(ow));
    CHECK(std::get<Wall>(ow) == std::get<Wall>(nw));
    ++agreed;
  }
}

TEST_CASE("walls for the ideal sheaf are nested") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Slice& sl = slice(rng() % 2 ? PaperSlice::A1 : PaperSlice::A2, n);
    const auto a = wall_oracle(sl, line_bundle(random_divisor(rng, -3, 1)), ideal_sheaf(n));
    const auto b = wall_oracle(sl, line_bundle(random_divisor(rng, -3, 1)), ideal_sheaf(n));
    if (!std::holds_alternative<Wall>(a) || !std::holds_alternative<Wall>(b)) continue;
    const Wall& wa = std::get<Wall>(a);
    const Wall& wb = std::get<Wall>(b);
    if (!wa.nonempty() || !wb.nonempty()) continue;
    CHECK((contains(wa, wb) || contains(wb, wa)));
  }
}

TEST_CASE("containment") {
  const Wall big{-1, 1};
  CHECK(contains(big, Wall{Rational(-1, 2), Rational(1, 4)}));
  CHECK_FALSE(contains(big, Wall{Rational(-1, 2), Rational(1, 3)}));
  CHECK(contains(big, big));
  CHECK(contains(big, Wall{0, -1}));
  CHECK_FALSE(contains(Wall{0, -1}, big));
  CHECK_FALSE(contains(Wall{Rational(-1, 2), Rational(1, 4)}, big));
}

TEST_CASE("degenerate loci") {
  const Slice& sl = slice(PaperSlice::A1, 3);
  const auto same = wall_oracle(sl, ideal_sheaf(3), ideal_sheaf(3));
  CHECK(std::holds_alternative<DegenerateLocus>(same));
  CHECK(std::holds_alternative<VerticalWall>(numerical_wall(sl, ideal_sheaf(3), ideal_sheaf(5))));
  CHECK(std::holds_alternative<DegenerateLocus>(wall_oracle(sl, ideal_sheaf(3), ideal_sheaf(5))));
  const ChernChar torsion{0, lattice::F(), 1};
  CHECK_THROWS_AS(numerical_wall(sl, torsion, ideal_sheaf(3)), std::invalid_argument);
}

TEST_CASE("printed special-case center differs from the expansion") {
  for (int n = 3; n <= 8; ++n) {
    const Slice& sl = slice(PaperSlice::A1, n);
    const Divisor l = -lattice::E(2);
    const Rational printed = printed_rank_one_center(sl, l, 0, n);
    CHECK(abs(printed) == Rational(n - 1) / (Rational(n) - Rational(3, 2)));
    CHECK(printed != oracle(sl, line_bundle(l), ideal_sheaf(n)).center);
    CHECK(rank_one_center(sl, l, 0, n) == -1);
  }
}

TEST_CASE("rank-one candidates on the A1 slice") {
  const auto cands = rank1_candidates(PaperSlice::A1, 3, 3);
  std::set<std::string> survivors;
  for (const auto& c : cands) {
    if (c.filter != Filter::Survivor) continue;
    survivors.insert(format_divisor(c.minus_l));
    REQUIRE(c.wall_with_point.has_value());
  }
  std::set<std::string> expected{format_divisor(lattice::F())};
  for (int i = 1; i <= 9; ++i) {
    expected.insert(format_divisor(lattice::E(i)));
    for (int j = i + 1; j <= 9; ++j) expected.insert(format_divisor(Divisor(lattice::H() - lattice::E(i) - lattice::E(j))));
  }
  CHECK(survivors == expected);
  for (const auto& c : cands) {
    if (c.filter != Filter::Survivor) continue;
    const Wall& w = std::get<Wall>(c.wall);
    CHECK(w.center >= -1);
    if (c.minus_l(0) == 1) CHECK(w.center > -1);
  }
  const auto it = std::find_if(cands.begin(), cands.end(),
                               [](const auto& c) { return c.minus_l == Divisor(lattice::H() - 2 * lattice::E(1)); });
  REQUIRE(it != cands.end());
  CHECK(it->filter == Filter::MultiplicityExceedsDegree);
}

TEST_CASE("rank-one candidates on the A2 slice") {
  const int n = 3;
  const auto cands = rank1_candidates(PaperSlice::A2, n, 3);
  std::set<std::string> survivors;
  for (const auto& c : cands) {
    if (c.filter == Filter::FiberDegreeAtLeastTwo) CHECK(c.a_degree >= n);
    if (c.filter == Filter::ADegreeBound) CHECK(c.a_degree >= n);
    if (c.filter == Filter::Survivor) survivors.insert(format_divisor(c.minus_l));
  }
  std::set<std::string> expected{format_divisor(lattice::F())};
  for (int i = 1; i <= 9; ++i) expected.insert(format_divisor(lattice::E(i)));
  for (int i = 2; i <= 9; ++i) expected.insert(format_divisor(Divisor(lattice::H() - lattice::E(1) - lattice::E(i))));
  CHECK(survivors == expected);
  const Divisor lines = 2 * lattice::H() - 2 * lattice::E(1) - lattice::E(2) - lattice::E(3) - lattice::E(4);
  const auto it = std::find_if(cands.begin(), cands.end(), [&](const auto& c) { return c.minus_l == lines; });
  REQUIRE(it != cands.end());
  CHECK(it->filter == Filter::LineCount);
  CHECK(it->fiber_degree == 1);
  CHECK(it->a_degree < n);
}

TEST_CASE("fiber degree at least two forces large A2 degree") {
  for (int n = 3; n <= 12; ++n) {
    const Slice& sl = slice(PaperSlice::A2, n);
    // (-L).A2 = (n/2)(-L).(H-E1) + (n-3/2)(-L).F and H-E1 is nef
    CHECK(intersect(Divisor(lattice::H() - lattice::E(1)), sl.A) == 2 * n - 3);
    CHECK(2 * n - 3 >= n);
  }
}

TEST_CASE("rank >= 2 bound") {
  CHECK(rank2_radius_bound(slice(PaperSlice::A1, 3), 3) == Rational(69, 800));
  CHECK(rank2_radius_bound(slice(PaperSlice::A2, 3), 3) == Rational(7, 72));
  for (int n = 3; n <= 12; ++n)
    for (const PaperSlice which : {PaperSlice::A1, PaperSlice::A2}) CHECK(rank2_radius_bound(slice(which, n), n) < 1);
}

TEST_CASE("Gieseker wall scan") {
  for (const PaperSlice which : {PaperSlice::A1, PaperSlice::A2}) {
    const auto cert = scan_gieseker_wall(which, 4, 2);
    CHECK(cert.certified());
    CHECK(cert.fiber_wall == Wall{-1, 1});
    CHECK(cert.rank2_bound < 1);
    CHECK(cert.survivor_count() > 0);
    CHECK_NOTHROW(gieseker_wall(which, 4, 1));
  }
  CHECK_THROWS_AS(rank1_candidates(PaperSlice::A1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(rank1_candidates(PaperSlice::A1, 3, -1), std::invalid_argument);
}

TEST_CASE("nef classes from the wall") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(nef_from_wall(slice(PaperSlice::A1, n), -1) == hilb::epsilon(lattice::H(), n));
    CHECK(nef_from_wall(slice(PaperSlice::A2, n), -1) == hilb::epsilon(Divisor(lattice::H() - lattice::E(1)), n));
    const hilb::HilbDivisor at0 = nef_from_wall(slice(PaperSlice::A1, n), 0);
    CHECK(at0.surf == Divisor(lattice::K() / Rational(2) + lattice::F()));
    CHECK(at0.b_half == -1);
  }
  const hilb::HilbDivisor e3 = nef_from_wall(slice(PaperSlice::A1, 3), -1);
  CHECK(e3.surf == Divisor(2 * lattice::F() + lattice::H()));
}
