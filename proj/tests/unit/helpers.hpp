#pragma once

// Shared test utilities. brute_elements is the independent ground truth for
// membership: plain reachability over nonnegative generator combinations,
// no Apéry tables involved.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "semibound/semigroup.hpp"

namespace semibound::testutil {

inline std::vector<char> brute_membership(const std::vector<int64_t>& generators,
                                          int64_t bound) {
  std::vector<char> reachable(static_cast<size_t>(bound) + 1, 0);
  reachable[0] = 1;
  for (int64_t v = 0; v <= bound; ++v) {
    if (!reachable[static_cast<size_t>(v)]) continue;
    for (int64_t h : generators)
      if (h <= bound - v) reachable[static_cast<size_t>(v + h)] = 1;
  }
  return reachable;
}

inline std::vector<int64_t> brute_elements(const std::vector<int64_t>& generators,
                                           int64_t bound) {
  std::vector<char> member = brute_membership(generators, bound);
  std::vector<int64_t> out;
  for (int64_t v = 0; v <= bound; ++v)
    if (member[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

// Seeded sample of generator lists with multiplicity <= max_mult. Plain
// modulo reduction keeps the sample identical across standard libraries.
inline std::vector<std::vector<int64_t>> sample_generator_lists(
    int count, uint64_t seed, int64_t max_mult = 12, int64_t max_gen = 60) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  std::vector<std::vector<int64_t>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<int64_t> gens;
    gens.push_back(draw(2, max_mult));
    int64_t extra = draw(1, 4);
    for (int64_t i = 0; i < extra; ++i) gens.push_back(draw(gens.front(), max_gen));
    int64_t g = 0;
    for (int64_t h : gens) g = std::gcd(g, h);
    if (g == 1) out.push_back(std::move(gens));
  }
  return out;
}

}  // namespace semibound::testutil
