#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "ksl/staircase.hpp"
#include "ksl/torus_knot.hpp"

using namespace ksl;

namespace {

// Brute-force enumerator: all strictly decreasing sequences with a_0 = g,
// a_{g-1} = 2-g, entries in [2-g, g], filtered by validate().
std::vector<Staircase> brute_force(long long g) {
  std::vector<Staircase> out;
  if (g == 1) {
    Staircase s({1});
    if (s.validate()) out.push_back(s);
    return out;
  }
  std::vector<long long> current{g};
  std::function<void()> extend = [&]() {
    if (static_cast<long long>(current.size()) == g - 1) {
      current.push_back(2 - g);
      Staircase s(current);
      if (s.validate()) out.push_back(s);
      current.pop_back();
      return;
    }
    for (long long next = current.back() - 1; next > 2 - g; --next) {
      current.push_back(next);
      extend();
      current.pop_back();
    }
  };
  extend();
  std::sort(out.begin(), out.end(), [](const Staircase& x, const Staircase& y) { return y < x; });
  return out;
}

}  // namespace

TEST_CASE("staircase validation", "[staircase]") {
  CHECK(Staircase({1}).validate());
  CHECK(Staircase({3, 1, -1}).validate());
  CHECK_FALSE(Staircase({3, 2, -1}).validate());  // a_1 = 2 > g - 2
  CHECK_FALSE(Staircase({2, 1}).validate());      // a_{g-1} != 2 - g
  CHECK_FALSE(Staircase({3, 1, 1, -1}).validate());
  CHECK_FALSE(Staircase({}).validate());
}

TEST_CASE("staircase enumeration small genus", "[staircase]") {
  auto g1 = enumerate_staircases(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == Staircase({1}));

  auto g2 = enumerate_staircases(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == Staircase({2, 0}));

  auto g3 = enumerate_staircases(3);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0] == Staircase({3, 1, -1}));
  CHECK(g3[1] == Staircase({3, 0, -1}));

  CHECK_THROWS_AS(enumerate_staircases(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_staircases(25), std::domain_error);
}

TEST_CASE("enumeration agrees with brute force and respects the 2^(g-2) bound",
          "[staircase]") {
  for (long long g = 2; g <= 8; ++g) {
    auto fast = enumerate_staircases(g);
    auto slow = brute_force(g);
    REQUIRE(fast.size() == slow.size());
    CHECK(std::equal(fast.begin(), fast.end(), slow.begin()));
    CHECK(fast.size() <= (1ull << (g - 2)));
    for (const auto& s : fast) CHECK(s.validate());
  }
}

TEST_CASE("staircase to alexander", "[staircase]") {
  CHECK(Staircase({1}).to_alexander() == TorusKnot(2, 3).alexander());
  CHECK(Staircase({3, 0, -1}).to_alexander() == TorusKnot(3, 4).alexander());

  for (long long g = 1; g <= 15; ++g) {
    std::vector<long long> exps;
    for (long long i = 0; i < g; ++i) exps.push_back(g - 2 * i);
    CHECK(Staircase(std::move(exps)).to_alexander() ==
          TorusKnot(2, 2 * g + 1).alexander());
  }

  // alternating unit coefficients, symmetric
  for (long long g = 1; g <= 9; ++g)
    for (const auto& s : enumerate_staircases(g)) {
      const LaurentPoly d = s.to_alexander();
      CHECK(d.is_symmetric());
      CHECK(d.eval_at_one() == 1);
      CHECK(d.term_count() % 2 == 1);
      CHECK(d.term_count() <= static_cast<std::size_t>(2 * g + 1));
      int expect = 1;
      for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
        CHECK(it->second == expect);
        expect = -expect;
      }
    }
}

TEST_CASE("staircase delta dd half", "[staircase]") {
  CHECK(Staircase({1}).delta_dd_half() == 1);
  CHECK(Staircase({2, 0}).delta_dd_half() == 3);
  CHECK(Staircase({3, 0, -1}).delta_dd_half() == 5);
  for (long long g = 1; g <= 12; ++g)
    for (const auto& s : enumerate_staircases(g))
      CHECK(s.delta_dd_half() ==
            exact_div(s.to_alexander().second_derivative_at_one(), Int(2)));
}

TEST_CASE("extremal bound", "[staircase]") {
  auto [m1, s1] = extremal_bound_check(1);
  CHECK(m1 == 1);
  CHECK(s1 == Staircase({1}));
  auto [m2, s2] = extremal_bound_check(2);
  CHECK(m2 == 3);
  CHECK(s2 == Staircase({2, 0}));
  auto [m5, s5] = extremal_bound_check(5);
  CHECK(m5 == 15);
  CHECK(s5 == Staircase({5, 3, 1, -1, -3}));
}

TEST_CASE("collision search", "[staircase]") {
  CHECK(dd_collision_search(1).empty());
  CHECK(dd_collision_search(5).empty());
  const auto found = dd_collision_search(10);
  for (const auto& c : found) {
    CHECK(c.genus > 5);
    CHECK(c.first != c.second);
    CHECK(c.first.delta_dd_half() == c.second.delta_dd_half());
  }
}

TEST_CASE("hfk bigraded generators", "[staircase]") {
  const std::vector<HfkGenerator> trefoil = {{1, 0}, {0, -1}, {-1, -2}};
  CHECK(hfk_bigraded(Staircase({1})) == trefoil);

  const std::vector<HfkGenerator> t25 = {{2, 0}, {1, -1}, {0, -2}, {-1, -3}, {-2, -4}};
  CHECK(hfk_bigraded(Staircase({2, 0})) == t25);

  // Adjacent staircase exponents cancel in Delta, so the generator count is
  // the term count of Delta, not 2g+1 in general: T(3,4) has 5, not 7.
  const auto t34 = hfk_bigraded(Staircase({3, 0, -1}));
  const std::vector<HfkGenerator> want34 = {{3, 0}, {2, -1}, {0, -2}, {-2, -5}, {-3, -6}};
  CHECK(t34 == want34);

  for (long long g = 1; g <= 10; ++g)
    for (const auto& s : enumerate_staircases(g)) {
      const auto gens = hfk_bigraded(s);  // throws if a postcondition fails
      CHECK(gens.size() == s.to_alexander().term_count());
      CHECK(gens.size() % 2 == 1);
      CHECK(gens.back().alexander == -g);
      CHECK(gens.back().maslov == -2 * g);
    }
}

TEST_CASE("surgery dimension formula", "[staircase]") {
  const Staircase trefoil({1});
  CHECK(surgery_hf_dim(trefoil, Int(1), Int(1)) == 1);  // Poincare sphere
  for (long long g = 1; g <= 6; ++g) {
    const auto stairs = enumerate_staircases(g);
    const Staircase& s = stairs.front();
    CHECK(surgery_hf_dim(s, to_int(2 * g - 1), Int(1)) == to_int(2 * g - 1));
  }
  const auto g2 = enumerate_staircases(2).front();
  CHECK(surgery_hf_dim(g2, Int(1), Int(2)) == 11);
  CHECK_THROWS(surgery_hf_dim(g2, Int(0), Int(1)));
  CHECK_THROWS(surgery_hf_dim(g2, Int(2), Int(4)));
}

TEST_CASE("lspace slope test", "[staircase]") {
  CHECK(is_lspace_slope(Staircase({1}), Int(1), Int(1)));
  const auto g3 = enumerate_staircases(3).front();
  CHECK_FALSE(is_lspace_slope(g3, Int(4), Int(1)));
  const auto g2 = enumerate_staircases(2).front();
  CHECK(is_lspace_slope(g2, Int(7), Int(2)));
  CHECK(surgery_hf_dim(g2, Int(7), Int(2)) == 7);
}

TEST_CASE("odd dimension vanishes for large surgeries", "[staircase]") {
  CHECK(hf_odd_dim_large(Staircase({1}), Int(7)) == 0);
  const auto g4 = enumerate_staircases(4).front();
  CHECK(hf_odd_dim_large(g4, Int(7)) == 0);
  const auto g2 = enumerate_staircases(2).front();
  CHECK(hf_odd_dim_large(g2, Int(100)) == 0);
  CHECK_THROWS(hf_odd_dim_large(g4, Int(6)));
}

TEST_CASE("torus knot staircases", "[staircase]") {
  CHECK(staircase_of(TorusKnot(2, 7)) == Staircase({3, 1, -1}));
  CHECK(staircase_of(TorusKnot(3, 4)) == Staircase({3, 0, -1}));
  CHECK(staircase_of(TorusKnot(4, 5)) == Staircase({6, 2, 1, -2, -3, -4}));
  for (long a = 2; a <= 8; ++a)
    for (long b = a + 1; b <= 9; ++b) {
      if (gcd(Int(a), Int(b)) != 1) continue;
      const TorusKnot t(a, b);
      const Staircase s = staircase_of(t);
      CHECK(s.validate());
      CHECK(s.to_alexander() == t.alexander());
    }
  CHECK_THROWS(staircase_of(TorusKnot(1, 5)));
  CHECK_THROWS(staircase_of(TorusKnot(-2, 3)));
}

TEST_CASE("staircase from alexander", "[staircase]") {
  for (long long g = 1; g <= 9; ++g)
    for (const auto& s : enumerate_staircases(g)) {
      const auto back = staircase_from_alexander(s.to_alexander());
      REQUIRE(back.has_value());
      CHECK(*back == s);
    }
  CHECK_FALSE(staircase_from_alexander(LaurentPoly::one()).has_value());
  // symmetric but not of L-space form (top coefficient 2)
  LaurentPoly f = LaurentPoly::monomial(Int(2), 1) + LaurentPoly::monomial(Int(-3), 0) +
                  LaurentPoly::monomial(Int(2), -1);
  CHECK_FALSE(staircase_from_alexander(f).has_value());
  // figure-eight polynomial: symmetric, Delta(1) = 1, but not a staircase
  LaurentPoly fig8 = LaurentPoly::monomial(Int(-1), 1) + LaurentPoly::monomial(Int(3), 0) +
                     LaurentPoly::monomial(Int(-1), -1);
  CHECK_FALSE(staircase_from_alexander(fig8).has_value());
}
