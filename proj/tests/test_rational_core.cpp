#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zspec/rational_core.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace zspec;

namespace {

Chain ch(std::vector<long> t, long a0 = 0) { return Chain(std::move(t), a0); }

Rat rat(long n, long d) { return make_rat(n, d); }

}  // namespace

TEST_CASE("rat_from_cf on known expansions") {
  CHECK(rat_from_cf(ch({1})) == rat(1, 1));
  CHECK(rat_from_cf(ch({1, 1, 2, 2, 1, 1})) == rat(17, 29));
  CHECK(rat_from_cf(ch({2, 2, 2, 2, 2, 2})) == rat(70, 169));
  CHECK(rat_from_cf(ch({2, 1, 9}, 1)) == rat(39, 29));  // integer part carried
  CHECK_THROWS_AS(rat_from_cf(Chain()), std::domain_error);
}

TEST_CASE("cf_from_rat round trips with every parity") {
  CHECK(cf_from_rat(rat(17, 29), Parity::Canonical) == ch({1, 1, 2, 2, 2}));
  CHECK(cf_from_rat(rat(17, 29), Parity::Even) == ch({1, 1, 2, 2, 1, 1}));
  CHECK(cf_from_rat(rat(17, 29), Parity::Odd) == ch({1, 1, 2, 2, 2}));
  CHECK(cf_from_rat(rat(1, 2), Parity::Canonical) == ch({2}));
  CHECK(cf_from_rat(rat(1, 2), Parity::Even) == ch({1, 1}));
  CHECK(cf_from_rat(rat(1, 2), Parity::Odd) == ch({2}));
  CHECK_THROWS_AS(cf_from_rat(rat(3, 2), Parity::Canonical), std::domain_error);
  CHECK_THROWS_AS(cf_from_rat(rat(-1, 2), Parity::Canonical), std::domain_error);

  for (long b = 2; b <= 1000; ++b)
    for (long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rat v = rat(a, b);
      for (Parity p : {Parity::Canonical, Parity::Even, Parity::Odd}) {
        const Chain c = cf_from_rat(v, p);
        REQUIRE(rat_from_cf(c) == v);
        if (p == Parity::Even) REQUIRE(c.size() % 2 == 0);
        if (p == Parity::Odd) REQUIRE(c.size() % 2 == 1);
        if (p == Parity::Canonical) REQUIRE(c.terms().back() >= 2);
      }
    }
}

TEST_CASE("matrix_of_chain continuants and determinant") {
  CHECK(matrix_of_chain(ch({2, 2, 1, 1})) == Mat2{12, 7, 5, 3});
  CHECK(matrix_of_chain(ch({1})) == Mat2{1, 1, 1, 0});
  CHECK(matrix_of_chain(ch({2, 2, 1, 1, 1, 1})) == Mat2{31, 19, 13, 8});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> t(1 + rng() % 9);
    for (auto& x : t) x = 1 + rng() % 3;
    const Chain c = ch(t);
    const Mat2 m = matrix_of_chain(c);
    CHECK(m.det() == (c.size() % 2 == 0 ? 1 : -1));
    // columns are the continuants of [a1;a2,...,an], so [0;T] = c/a
    CHECK(m.a == den(rho(c)));
    CHECK(m.c == num(rho(c)));
  }
}

TEST_CASE("mobius_apply on rationals") {
  CHECK(mobius_apply(Mat2::identity(), rat(17, 29)) == rat(17, 29));
  CHECK(mobius_apply(Mat2{12, 7, 5, 3}, Rat(0)) == rat(7, 3));
  CHECK_THROWS_AS(mobius_apply(Mat2{1, 0, 1, -1}, Rat(1)), std::domain_error);
}

TEST_CASE("fixed points of chain matrices") {
  const QuadraticSurd golden = fixed_point(matrix_of_chain(ch({1, 1})));
  CHECK(golden == QuadraticSurd(1, 1, 5, 2));

  const QuadraticSurd s = fixed_point(matrix_of_chain(ch({2, 2, 1, 1})));
  CHECK(s == QuadraticSurd(9, 1, 221, 10));

  const QuadraticSurd silver = fixed_point(matrix_of_chain(ch({2, 2})));
  CHECK(silver == QuadraticSurd(1, 1, 2, 1));  // 1 + sqrt(2)
  CHECK(silver.p() == 1);
  CHECK(silver.q() == 1);
  CHECK(silver.d() == 2);
  CHECK(silver.r() == 1);

  // perfect-square discriminant reported as degenerate
  CHECK_THROWS_AS(fixed_point(Mat2{2, 1, 1, 2}), std::domain_error);
}

TEST_CASE("fixed point is fixed under the mobius action, exhaustively") {
  // all {1,2}-chains of length <= 12
  for (std::size_t len = 1; len <= 12; ++len) {
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::vector<long> t(len);
      for (std::size_t i = 0; i < len; ++i) t[i] = (bits >> i & 1) ? 2 : 1;
      const Mat2 m = matrix_of_chain(ch(t));
      const QuadraticSurd x = fixed_point(m);
      REQUIRE(mobius_apply(m, x) == x);
    }
  }
}

TEST_CASE("exact surd comparison") {
  const QuadraticSurd a(3, -1, 5, 2);  // (3-sqrt(5))/2
  CHECK(surd_cmp(a, rat(10, 29)) > 0);
  CHECK(surd_cmp(QuadraticSurd(1, 1, 2, 1), QuadraticSurd(1, 1, 2, 1)) == 0);
  CHECK(surd_cmp(QuadraticSurd(6, -4, 2, 1), rat(1, 3)) > 0);  // 6-4*sqrt(2)
  CHECK(surd_cmp(rat(1, 3), QuadraticSurd(6, -4, 2, 1)) < 0);
  // same value, square factor left in the radicand
  CHECK(QuadraticSurd(6, -1, 32, 1) == QuadraticSurd(6, -4, 2, 1));
}

TEST_CASE("surd order agrees with floating point when the gap is visible") {
  std::mt19937_64 rng(11);
  std::vector<QuadraticSurd> pool;
  for (int i = 0; i < 60; ++i) {
    const long p = static_cast<long>(rng() % 41) - 20;
    const long q = static_cast<long>(rng() % 19) - 9;
    const long d = 2 + static_cast<long>(rng() % 200);
    const long r = 1 + static_cast<long>(rng() % 20);
    pool.emplace_back(p, q, d, r);
  }
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const double fx = x.to_double(), fy = y.to_double();
      if (std::abs(fx - fy) > 1e-9)
        REQUIRE(surd_cmp(x, y) == (fx < fy ? -1 : 1));
    }
}

TEST_CASE("periodic continued fraction values") {
  CHECK(periodic_cf_value(Chain(), ch({1, 1})) == QuadraticSurd(-1, 1, 5, 2));
  CHECK(periodic_cf_value(ch({1, 1}), ch({2, 2, 1, 1})) ==
        QuadraticSurd(-9, 1, 221, 10));
  CHECK(periodic_cf_value(Chain(), ch({2, 2})) == QuadraticSurd(-1, 1, 2, 1));
  CHECK_THROWS_AS(periodic_cf_value(ch({1}), Chain()), std::domain_error);
}

TEST_CASE("surd arithmetic needed for limit values") {
  const QuadraticSurd t = periodic_cf_value(ch({1, 1}), ch({2, 2, 1, 1}));
  const QuadraticSurd sum = t.plus(rat(12, 5));  // (15+sqrt(221))/10
  CHECK(sum == QuadraticSurd(15, 1, 221, 10));
  CHECK(sum.reciprocal() == QuadraticSurd(75, -5, 221, 2));
  CHECK(sub(rat(1, 2), QuadraticSurd(-1, 1, 5, 2)).sign() < 0);
  CHECK_THROWS_AS(QuadraticSurd::from_rational(Rat(0)).reciprocal(),
                  std::domain_error);
}

TEST_CASE("correctly rounded decimals from integer square roots") {
  CHECK(QuadraticSurd(3, -1, 5, 2).decimal(12) == "0.381966011250");
  CHECK(QuadraticSurd(3, -1, 5, 2).decimal(6) == "0.381966");
  CHECK(QuadraticSurd(6, -4, 2, 1).decimal(12) == "0.343145750508");
  CHECK(QuadraticSurd(6, -4, 2, 1).decimal(6) == "0.343146");  // rounds up
  CHECK(QuadraticSurd(75, -5, 221, 2).decimal(12) == "0.334828131704");
  CHECK(QuadraticSurd(1, 1, 2, 1).decimal(5) == "2.41421");
  CHECK(QuadraticSurd(-1, -1, 2, 1).decimal(4) == "-2.4142");
  CHECK(decimal_string(rat(1, 3), 6) == "0.333333");
  CHECK(decimal_string(rat(-1, 8), 2) == "-0.12");  // ties to even
  CHECK(decimal_string(rat(3, 8), 2) == "0.38");
}

TEST_CASE("surd and rational string forms") {
  CHECK(QuadraticSurd(3, -1, 5, 2).str() == "(3-sqrt(5))/2");
  CHECK(QuadraticSurd(6, -4, 2, 1).str() == "6-4*sqrt(2)");
  CHECK(QuadraticSurd(1, 1, 2, 1).str() == "1+sqrt(2)");
  CHECK(QuadraticSurd::from_rational(rat(17, 29)).str() == "17/29");
}
