#include <doctest.h>

#include <stdexcept>

#include "lenslab/casson_walker.hpp"
#include "lenslab/number_theory.hpp"
#include "oracles.hpp"

using namespace lenslab;

TEST_CASE("lambda examples") {
  CHECK(lambda_rec(1, 1) == Rational(0));
  CHECK(lambda_rec(1, 0) == Rational(0));
  CHECK(lambda_rec(7, 1) == Rational(-5, 14));
  CHECK(lambda_rec(7, 2) == Rational(-1, 14));
  CHECK(lambda_rec(12, 7) == Rational(-1, 72));
  CHECK(lambda_cf(7, 2) == Rational(-1, 14));
  CHECK(lambda_cf(9, 1) == Rational(-14, 27));
  CHECK(lambda_cf(9, 1) == Rational(1, 4) - Rational(9 * 9 + 2, 12 * 9));
  CHECK(lambda_cf(11, 3) == Rational(-3, 22));
  CHECK(lambda_cf(1, 1) == Rational(0));
  CHECK_THROWS_AS(lambda_rec(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(lambda_cf(6, 4), std::invalid_argument);
}

TEST_CASE("casson_walker records its route") {
  const auto a = casson_walker(canonical(12, 7), LambdaMethod::Recursion);
  const auto b = casson_walker(canonical(12, 7), LambdaMethod::ContinuedFraction);
  CHECK(a.value == b.value);
  CHECK(a.method == LambdaMethod::Recursion);
  CHECK(b.method == LambdaMethod::ContinuedFraction);
  CHECK(casson_walker(canonical(1, 0), LambdaMethod::ContinuedFraction).value == Rational(0));
}

TEST_CASE("delta examples") {
  CHECK(delta(7, 1) == Rational(0));
  CHECK(delta(7, 2) == Rational(24, 7));
  CHECK(delta(11, 3) == Rational(72, 11));
  CHECK(delta(13, 2) == Rational(84, 13));
  CHECK(delta(10, 3) == Rational(36, 5));
}

TEST_CASE("dcw_check examples") {
  CHECK(dcw_check(7, 2));
  CHECK(dcw_check(1, 0));
  CHECK(dcw_check(11, 3));
  DMemo memo;
  CHECK(dcw_check(12, 7, &memo));
  CHECK(memo.find(12, 7) != nullptr);
}

TEST_CASE("both routes match Dedekind sums") {
  for (std::int64_t p = 2; p <= 80; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::naive_gcd(p, q) != 1) continue;
      const auto expected = oracle::lambda_dedekind(p, q);
      REQUIRE(lambda_rec(p, q) == expected);
      REQUIRE(lambda_cf(p, q) == expected);
    }
  }
}

TEST_CASE("antisymmetry and inverse invariance up to p = 300") {
  for (std::int64_t p = 2; p <= 300; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::naive_gcd(p, q) != 1) continue;
      const auto l = lambda_cf(p, q);
      REQUIRE(lambda_cf(p, p - q) == -l);
      REQUIRE(lambda_rec(p, p - q) == -l);
      REQUIRE(lambda_cf(p, mod_inverse(q, p)) == l);
      REQUIRE(lambda_rec(p, -q) == -l);
    }
  }
  for (std::int64_t p = 2; p <= 300; ++p) {
    REQUIRE(lambda_rec(p, 1) == Rational(1, 4) - Rational(p * p + 2, 12 * p));
  }
}

TEST_CASE("tabulated delta families against the Dedekind oracle") {
  for (std::int64_t x = 4; x <= 20; ++x) {
    auto d = [](std::int64_t p, std::int64_t q) {
      return Rational(12) * (oracle::lambda_dedekind(p, q) - oracle::lambda_dedekind(p, 1));
    };
    CHECK(d(x, 1) == Rational(0));
    CHECK(d(2 * x - 1, 2) == Rational(x) - Rational(x, 2 * x - 1));
    CHECK(d(3 * x - 1, 3) == Rational(2 * x - 1) - Rational(x + 1, 3 * x - 1));
    CHECK(d(4 * x - 1, 4) == Rational(3 * x - 2) - Rational(x + 2, 4 * x - 1));
    CHECK(d(3 * x - 2, 3) == Rational(2 * x) - Rational(2 * x, 3 * x - 2));
    CHECK(d(4 * x - 3, 4) == Rational(3 * x) - Rational(3 * x, 4 * x - 3));
    // [2, x, 2] evaluates to (4x - 4)/(2x - 1); the value is 3x - 3.
    CHECK(hj_eval(CFExpansion({2, x, 2})) == std::pair<std::int64_t, std::int64_t>{4 * x - 4, 2 * x - 1});
    CHECK(d(4 * x - 4, 2 * x - 1) == Rational(3 * x - 3));
    CHECK(delta(4 * x - 4, 2 * x - 1) == Rational(3 * x - 3));
  }
}

TEST_CASE("lambda at p around 10^12") {
  const std::int64_t p = 1000000000039LL;
  for (std::int64_t q : {std::int64_t{1}, std::int64_t{2}, p - 1, std::int64_t{618033988749}}) {
    REQUIRE(lambda_cf(p, q) == lambda_rec(p, q));
  }
  CHECK(lambda_cf(p, 1) == Rational(1, 4) - Rational(Integer(p) * p + 2, Integer(12) * p));
  CHECK(lambda_cf(p, p - 1) == -lambda_cf(p, 1));
}
