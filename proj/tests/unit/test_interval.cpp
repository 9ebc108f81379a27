#include <doctest.h>

#include <vector>

#include "semibound/arith.hpp"
#include "semibound/gm_bounds.hpp"
#include "semibound/interval.hpp"
#include "semibound/oracle.hpp"

using namespace semibound;

namespace {

NumericalSemigroup interval_semigroup(int64_t n, int64_t t) {
  return interval_to_semigroup(make_interval(n, t));
}

}  // namespace

TEST_CASE("interval validation") {
  CHECK_THROWS_AS(make_interval(5, 5), InvalidInterval);
  CHECK_THROWS_AS(make_interval(5, 0), InvalidInterval);
  CHECK_THROWS_AS(apery_interval(3, 7), InvalidInterval);
  CHECK(make_interval(5, 2) == IntervalSemigroup{5, 2});
}

TEST_CASE("interval Apéry closed form") {
  CHECK(apery_interval(5, 2).least() == std::vector<int64_t>{0, 6, 7, 13, 14});
  CHECK(apery_interval(15, 3).least(4) == 34);
  for (int64_t n : {2, 5, 9}) {
    std::vector<int64_t> expected{0};
    for (int64_t k = 1; k < n; ++k) expected.push_back(n + k);
    CHECK(apery_interval(n, n - 1).least() == expected);  // ordinary case
  }
}

TEST_CASE("interval Apéry equals the general construction") {
  for (int64_t n = 2; n <= 40; ++n)
    for (int64_t t = 1; t < n; ++t)
      CHECK(apery_interval(n, t) == interval_semigroup(n, t).apery_set(n));
}

TEST_CASE("interval detection on minimal generators") {
  CHECK(detect_interval(interval_semigroup(7, 3)) == IntervalSemigroup{7, 3});
  CHECK(detect_interval(make_semigroup({5, 6, 7, 8, 9, 10, 11})) ==
        IntervalSemigroup{5, 4});  // 10 and 11 are not minimal
  CHECK_FALSE(detect_interval(make_semigroup({5, 7})).has_value());
  CHECK_FALSE(detect_interval(make_semigroup({1})).has_value());
}

TEST_CASE("term-sum bound hits the reference sweep points") {
  CHECK(gm_interval_sum(15, 3, 2) == 9);
  CHECK(gm_interval_sum(15, 3, 3) == 19);
  CHECK(gm_interval_sum(15, 12, 2) == 22);
  CHECK_THROWS_AS(gm_interval_sum(15, 3, 0), DomainError);
}

TEST_CASE("exceptional-residue bound") {
  CHECK(gm_interval_setA(15, 12, 2) == 22);
  CHECK(gm_interval_setA(15, 9, 25) == 375);
  for (int64_t q = 1; q <= 50; ++q)  // ordinary semigroup: empty exceptional set
    CHECK(gm_interval_setA(15, 14, q) == 2 + 15 * q - ceil_div(15, q));
  CHECK_THROWS_AS(gm_interval_setA(15, 3, 2), IntervalOutOfRange);
}

TEST_CASE("three-case closed bound") {
  CHECK(gm_interval_closed(15, 12, 2) == 22);    // q <= t + 1
  CHECK(gm_interval_closed(15, 9, 12) == 177);   // t + 2 <= q <= n - 1
  CHECK(gm_interval_closed(15, 9, 25) == 375);   // n <= q
  CHECK(gm_interval_closed(15, 12, 28) == 420);
  CHECK_THROWS_AS(gm_interval_closed(15, 3, 2), IntervalOutOfRange);
  CHECK_THROWS_AS(gm_interval_closed(2, 1, 5), DegenerateT);
}

TEST_CASE("membership of q decides equality with the Lewittes bound") {
  CHECK(interval_contains_q(15, 3, 16));
  CHECK_FALSE(interval_contains_q(15, 3, 19));
  for (int64_t q = 1; q < 15; ++q) CHECK_FALSE(interval_contains_q(15, 3, q));

  for (int64_t n = 2; n <= 25; ++n)
    for (int64_t t = 1; t < n; ++t)
      for (int64_t q = 1; q <= 3 * n; ++q)
        CHECK(interval_contains_q(n, t, q) ==
              (gm_interval_sum(n, t, q) == q * n + 1));
}

TEST_CASE("all interval routes agree with each other and the general formula") {
  for (int64_t n = 2; n <= 30; ++n) {
    for (int64_t t = 1; t < n; ++t) {
      NumericalSemigroup s = interval_semigroup(n, t);
      for (int64_t q = 1; q <= 3 * n; ++q) {
        int64_t sum = gm_interval_sum(n, t, q);
        CHECK(sum == gm_general(s, q));
        if (t != 1 && t >= ceil_div(n - 1, 2)) {
          CHECK(gm_interval_setA(n, t, q) == sum);
          CHECK(gm_interval_closed(n, t, q) == sum);
        }
      }
    }
  }
}

TEST_CASE("ordinary semigroups collapse to the simple formula") {
  for (int64_t n = 2; n <= 40; ++n)
    for (int64_t q = 1; q <= 3 * n; ++q)
      CHECK(gm_interval_sum(n, n - 1, q) == 2 + q * n - ceil_div(n, q));
}

TEST_CASE("term rows expose shifted residues and raw values consistently") {
  for (int64_t n : {7, 12, 19})
    for (int64_t t = 1; t < n; ++t)
      for (int64_t q : {1, 2, 5, 11, 40}) {
        // the zero row never dips below q
        IntervalGMTerms zero = interval_terms(n, t, q, 0);
        for (int64_t c : zero.terms) CHECK(c >= q);
        for (int64_t k = 0; k < n; ++k) {
          IntervalGMTerms row = interval_terms(n, t, q, k);
          REQUIRE(row.terms.size() == static_cast<size_t>(t));
          int64_t best = q;
          for (int64_t i = 1; i <= t; ++i) {
            CHECK(row.shifted_residues[static_cast<size_t>(i - 1)] ==
                  mod_floor(k - i * q, n));
            best = std::min(best, row.terms[static_cast<size_t>(i - 1)]);
          }
          CHECK(best == interval_min_term(n, t, q, k));
        }
      }
  CHECK_THROWS_AS(interval_terms(7, 3, 5, 7), DomainError);
}

TEST_CASE("clamped minimum follows the residue case analysis") {
  // for 1 <= k <= t: q-1 when q | k, else q; for t < k <= n-1 (half-interval
  // range): q-2 when q | k, q-1 when t >= (k mod q) or the shifted class
  // q | (k+n) applies with k <= q*t - n, else q
  for (int64_t n = 2; n <= 25; ++n)
    for (int64_t t = ceil_div(n - 1, 2); t < n; ++t)
      for (int64_t q = 2; q <= 3 * n; ++q)
        for (int64_t k = 1; k < n; ++k) {
          int64_t expected;
          if (k <= t) {
            expected = (k % q == 0) ? q - 1 : q;
          } else if (k % q == 0) {
            expected = q - 2;
          } else if (t >= k % q || ((k + n) % q == 0 && k <= q * t - n)) {
            expected = q - 1;
          } else {
            expected = q;
          }
          CHECK(interval_min_term(n, t, q, k) == expected);
        }
}

TEST_CASE("q = 1 yields the minimal bound everywhere") {
  for (int64_t n = 2; n <= 20; ++n)
    for (int64_t t = 1; t < n; ++t) {
      CHECK(gm_interval_sum(n, t, 1) == 2);
      if (t != 1 && t >= ceil_div(n - 1, 2)) {
        CHECK(gm_interval_setA(n, t, 1) == 2);
        CHECK(gm_interval_closed(n, t, 1) == 2);
      }
    }
}

TEST_CASE("term sum matches the brute force off the closed-form range") {
  for (int64_t n : {5, 8, 11}) {
    for (int64_t t = 1; t < n; ++t) {
      NumericalSemigroup s = interval_semigroup(n, t);
      for (int64_t q : {1, 2, 3, 7, 16})
        CHECK(gm_interval_sum(n, t, q) == gm_bruteforce(s, q));
    }
  }
}
