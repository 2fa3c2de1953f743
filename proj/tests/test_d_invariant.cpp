#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "lenslab/casson_walker.hpp"
#include "lenslab/d_invariant.hpp"
#include "oracles.hpp"

using namespace lenslab;

namespace {

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& x : v) x = -x;
  return sorted(std::move(v));
}

}  // namespace

TEST_CASE("d examples") {
  CHECK(d_invariant(1, 1, 0) == Rational(0));
  CHECK(d_invariant(1, 0, 5) == Rational(0));
  CHECK(d_invariant(7, 1, 3) == Rational(3, 14));
  CHECK(d_invariant(7, 2, 4) == Rational(1, 2));
  CHECK(d_invariant(11, 3, 6) == Rational(9, 22));
  CHECK(d_invariant(7, 2, 11) == Rational(1, 2));
  CHECK(d_invariant(7, 2, -3) == Rational(1, 2));
  CHECK(d_invariant(7, 9, 4) == Rational(1, 2));
  CHECK_THROWS_AS(d_invariant(6, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(d_invariant(0, 1, 0), std::invalid_argument);
}

TEST_CASE("d_closed examples") {
  CHECK(d_closed(7, 1, 0) == Rational(-3, 2));
  CHECK(d_closed(7, 2, 4) == Rational(1, 2));
  CHECK(d_closed(7, 2, 3) == Rational(-1, 14));
  CHECK_THROWS_AS(d_closed(7, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(d_closed(8, 2, 0), std::invalid_argument);
}

TEST_CASE("d tables") {
  const auto t = d_table(canonical(7, 2));
  const std::vector<Rational> expected{Rational(-9, 14), Rational(-9, 14), Rational(3, 14),
                                       Rational(-1, 14), Rational(1, 2),   Rational(-1, 14),
                                       Rational(3, 14)};
  CHECK(t.values() == expected);
  CHECK(t[11] == Rational(1, 2));
  CHECK(t.at(SpincLabel::reduce(-1, 7)) == Rational(3, 14));
  CHECK(t.sum() == Rational(-1, 2));
  CHECK(d_multiset(canonical(7, 2)) == sorted(expected));
  CHECK(d_multiset(canonical(1, 0)) == std::vector<Rational>{Rational(0)});
  CHECK(d_multiset(canonical(2, 1)) == std::vector<Rational>{Rational(-1, 4), Rational(1, 4)});
  CHECK(d_table(canonical(7, 1)).sum() == Rational(-5, 2));
  CHECK(d_table(canonical(11, 3)).sum() == Rational(-3, 2));
}

TEST_CASE("table and scalar routes agree with the literal recursion") {
  DMemo memo;
  for (std::int64_t p = 1; p <= 60; ++p) {
    for (std::int64_t q = 0; q < std::max<std::int64_t>(p, 1); ++q) {
      if (oracle::naive_gcd(p, q) != 1) continue;
      const auto with = d_table(canonical(p, q), &memo);
      const auto without = d_table(canonical(p, q));
      REQUIRE(with.values() == without.values());
      for (std::int64_t i = 0; i < p; ++i) {
        REQUIRE(with[i] == d_invariant(p, q, i));
        if (p > 1) REQUIRE(with[i] == oracle::d_literal(p, q, i));
      }
    }
  }
}

TEST_CASE("sum identity against Dedekind sums") {
  for (std::int64_t p = 2; p <= 60; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::naive_gcd(p, q) != 1) continue;
      REQUIRE(d_table(canonical(p, q)).sum() == Rational(p) * oracle::lambda_dedekind(p, q));
    }
  }
}

TEST_CASE("well-definedness and symmetries up to p = 100") {
  for (std::int64_t p = 2; p <= 100; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::naive_gcd(p, q) != 1) continue;
      const auto t = d_table(canonical(p, q));
      for (std::int64_t i = 0; i < q; ++i) {
        REQUIRE(oracle::d_literal(p, q, i + p) == t[i]);
      }
      for (std::int64_t i = 0; i < p; ++i) {
        REQUIRE(t[i] == t[(p + q - 1 - i) % p]);
      }
      REQUIRE(d_multiset(canonical(p, p - q)) == negated(t.values()));
      REQUIRE(d_multiset(canonical(p, oracle::inverse_by_search(q, p))) == t.multiset());
    }
  }
}

TEST_CASE("closed forms up to p = 200") {
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t q : {1, 2}) {
      if (q >= p || oracle::naive_gcd(p, q) != 1) continue;
      const auto t = d_table(canonical(p, q));
      for (std::int64_t i = 0; i < p; ++i) REQUIRE(d_closed(p, q, i) == t[i]);
    }
  }
}

TEST_CASE("L(3, p) pattern") {
  for (std::int64_t p = 1; p <= 150; p += 6) {
    for (std::int64_t i = 0; i < 3; ++i) {
      REQUIRE(d_invariant(3, p, i) == (i % 3 == 0 ? Rational(-1, 2) : Rational(1, 6)));
    }
  }
}

TEST_CASE("slot range") {
  CHECK(slot_range(1) == std::vector<std::int64_t>{0});
  CHECK(slot_range(2) == std::vector<std::int64_t>{0, 1});
  CHECK(slot_range(7) == std::vector<std::int64_t>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(slot_range(8) == std::vector<std::int64_t>{-3, -2, -1, 0, 1, 2, 3, 4});
  CHECK_THROWS_AS(slot_range(0), std::invalid_argument);
}

TEST_CASE("E examples") {
  CHECK(e_invariant(7, 0) == Rational(-3, 2));
  CHECK(e_invariant(7, 3) == Rational(3, 14));
  CHECK(e_invariant(11, 4) == Rational(1, 22));
  CHECK(e_invariant(11, -4) == Rational(1, 22));
  CHECK(e_invariant(7, 10) == Rational(3, 14));
  CHECK(grading_shift(7, 3) == Rational(3, 14));
  CHECK_THROWS_AS(e_invariant(0, 1), std::invalid_argument);
  const EVector e(7);
  CHECK(e.at(-4) == e.at(3));
  CHECK(e.multiset() == d_multiset(canonical(7, 1)));
}

TEST_CASE("E consistency up to p = 150") {
  for (std::int64_t p = 1; p <= 150; ++p) {
    const EVector e(p);
    std::vector<Rational> brute;
    for (auto k : slot_range(p)) {
      const auto v = e_invariant(p, k);
      REQUIRE(v == oracle::e_brute(p, k));
      REQUIRE(v == e_invariant(p, -k));
      REQUIRE(e.at(k) == v);
      brute.push_back(v);
    }
    REQUIRE(sorted(brute) == d_multiset(canonical(p, 1)));
    REQUIRE(e.multiset() == sorted(brute));
  }
}

TEST_CASE("memo is shared safely between threads") {
  DMemo shared;
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&shared] {
      for (std::int64_t p = 2; p <= 80; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
          if (oracle::naive_gcd(p, q) == 1) d_table(canonical(p, q), &shared);
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& [key, table] : shared.entries()) {
    REQUIRE(*table == d_table(canonical(key.first, key.second)).values());
  }
  CHECK(shared.find(7, 2) != nullptr);
  CHECK(shared.find(7, 2)->size() == 7);
}
