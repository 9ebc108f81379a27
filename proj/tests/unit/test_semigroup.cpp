#include <doctest.h>

#include <algorithm>
#include <future>
#include <vector>

#include "helpers.hpp"
#include "semibound/semigroup.hpp"

using namespace semibound;
using semibound::testutil::brute_elements;
using semibound::testutil::brute_membership;
using semibound::testutil::sample_generator_lists;

TEST_CASE("construction normalizes and validates generators") {
  NumericalSemigroup s = make_semigroup({9, 8, 31});
  CHECK(s.generators() == std::vector<int64_t>{8, 9, 31});
  CHECK(s.multiplicity() == 8);

  NumericalSemigroup all = make_semigroup({1});
  CHECK(all.multiplicity() == 1);
  CHECK(all.genus() == 0);

  CHECK(make_semigroup({5, 5, 6, 6}).generators() == std::vector<int64_t>{5, 6});

  CHECK_THROWS_AS(make_semigroup({4, 6}), NonCoprimeGenerators);
  CHECK_THROWS_AS(make_semigroup({}), EmptyGenerators);
  CHECK_THROWS_AS(make_semigroup({0, 5}), ZeroGenerator);
  CHECK_THROWS_AS(make_semigroup({5, -3}), ZeroGenerator);
}

TEST_CASE("Apéry tables list the least element per residue class") {
  NumericalSemigroup s = make_semigroup({5, 6});
  CHECK(s.apery_set(5).least() == std::vector<int64_t>{0, 6, 12, 18, 24});
  CHECK(s.apery_set(6).least() == std::vector<int64_t>{0, 25, 20, 15, 10, 5});

  CHECK(make_semigroup({1}).apery_set(1).least() == std::vector<int64_t>{0});

  CHECK_THROWS_AS(s.apery_set(4), NotAnElement);   // 4 not in <5,6>
  CHECK_THROWS_AS(s.apery_set(0), NotAnElement);
  CHECK_THROWS_AS(s.apery_set(-5), NotAnElement);
}

TEST_CASE("Apéry tables satisfy the defining property at any base") {
  auto check_table = [](const NumericalSemigroup& s, int64_t n) {
    AperyTable table = s.apery_set(n);
    REQUIRE(table.modulus() == n);
    CHECK(table.least(0) == 0);
    for (int64_t i = 0; i < n; ++i) {
      int64_t w = table.least(i);
      CHECK(w % n == i);
      CHECK(s.contains(w));
      CHECK_FALSE(s.contains(w - n));
      CHECK(table.quotient(i) >= 0);
      CHECK(table.quotient(i) * n + i == w);
    }
  };
  for (const auto& gens : sample_generator_lists(12, /*seed=*/20'240'601)) {
    NumericalSemigroup s = make_semigroup(gens);
    for (int64_t n = 1; n <= 200; ++n)
      if (s.contains(n)) check_table(s, n);
  }
}

TEST_CASE("membership matches plain combination search") {
  NumericalSemigroup s56 = make_semigroup({5, 6});
  CHECK_FALSE(s56.contains(13));
  CHECK(s56.contains(0));
  CHECK_FALSE(s56.contains(-2));
  CHECK(make_semigroup({8, 9, 31}).contains(31));

  for (const auto& gens : sample_generator_lists(20, 987, /*max_mult=*/15)) {
    NumericalSemigroup s = make_semigroup(gens);
    int64_t bound = s.frobenius() + 2 * s.multiplicity();
    std::vector<char> truth = brute_membership(gens, bound);
    for (int64_t v = 0; v <= bound; ++v)
      CHECK(s.contains(v) == static_cast<bool>(truth[static_cast<size_t>(v)]));
  }
}

TEST_CASE("genus counts the gaps") {
  CHECK(make_semigroup({5, 6}).genus() == 10);
  CHECK(make_semigroup({1}).genus() == 0);
  CHECK(make_semigroup({8, 9, 31}).genus() == 24);

  for (const auto& gens : sample_generator_lists(15, 5'150)) {
    NumericalSemigroup s = make_semigroup(gens);
    int64_t gaps = 0;
    for (int64_t v = 0; v <= s.frobenius(); ++v)
      if (!s.contains(v)) ++gaps;
    CHECK(s.genus() == gaps);
  }
}

TEST_CASE("frobenius is the largest gap, -1 for the full set") {
  CHECK(make_semigroup({5, 6}).frobenius() == 19);
  CHECK(make_semigroup({1}).frobenius() == -1);
  CHECK(make_semigroup({2, 3}).frobenius() == 1);

  for (const auto& gens : sample_generator_lists(15, 31'337)) {
    NumericalSemigroup s = make_semigroup(gens);
    int64_t f = s.frobenius();
    CHECK_FALSE(s.contains(f));
    for (int64_t v = f + 1; v <= f + 2 * s.multiplicity(); ++v) CHECK(s.contains(v));
  }
}

TEST_CASE("minimal generators are found and regenerate the semigroup") {
  CHECK(make_semigroup({8, 9, 31, 40}).minimal_generators() ==
        std::vector<int64_t>{8, 9, 31});
  CHECK(make_semigroup({1}).minimal_generators() == std::vector<int64_t>{1});
  CHECK(make_semigroup({5, 6, 7, 8, 9}).minimal_generators() ==
        std::vector<int64_t>{5, 6, 7, 8, 9});

  for (const auto& gens : sample_generator_lists(20, 777)) {
    NumericalSemigroup s = make_semigroup(gens);
    NumericalSemigroup rebuilt = make_semigroup(s.minimal_generators());
    int64_t bound = s.frobenius() + 1;
    CHECK(s.elements_up_to(bound) == rebuilt.elements_up_to(bound));
    // no minimal generator is a sum of two nonzero elements
    for (int64_t g : s.minimal_generators())
      for (int64_t x = s.multiplicity(); 2 * x <= g; ++x) {
        bool decomposable = s.contains(x) && s.contains(g - x);
        CHECK_FALSE(decomposable);
      }
  }
}

TEST_CASE("elements_up_to lists exactly the members") {
  CHECK(make_semigroup({5, 6}).elements_up_to(12) ==
        std::vector<int64_t>{0, 5, 6, 10, 11, 12});
  CHECK(make_semigroup({7, 11}).elements_up_to(0) == std::vector<int64_t>{0});
  CHECK(make_semigroup({1}).elements_up_to(4) ==
        std::vector<int64_t>{0, 1, 2, 3, 4});
  CHECK(make_semigroup({5, 6}).elements_up_to(-1).empty());
  CHECK(make_semigroup({5, 6}).elements_up_to(30) == brute_elements({5, 6}, 30));
}

TEST_CASE("Apéry table does not depend on the generator presentation") {
  NumericalSemigroup a = make_semigroup({8, 9, 31});
  NumericalSemigroup b = make_semigroup({8, 9, 31, 40});
  CHECK(a.apery_at_multiplicity() == b.apery_at_multiplicity());
  CHECK(a.apery_set(9) == b.apery_set(9));
  CHECK(a == b);
  CHECK(a != make_semigroup({8, 9}));
}

TEST_CASE("lazy caches are safe under concurrent first access") {
  NumericalSemigroup s = make_semigroup({11, 13, 17, 19});
  std::vector<std::future<int64_t>> futures;
  for (int i = 0; i < 8; ++i)
    futures.push_back(std::async(std::launch::async, [&s] {
      return s.genus() + static_cast<int64_t>(s.minimal_generators().size());
    }));
  for (auto& f : futures) CHECK(f.get() == s.genus() + 4);
}
