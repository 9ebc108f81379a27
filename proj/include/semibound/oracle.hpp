#pragma once

// Brute-force evaluation of the Geil-Matsumoto count straight from its
// definition GM_q(S) = #(S \ (qS* + S)) + 1. Ground truth for the closed
// formulas; deliberately naive, and deliberately sharing nothing with
// gm_bounds beyond semigroup membership.

#include <cstdint>
#include <vector>

#include "semibound/semigroup.hpp"

namespace semibound {

inline constexpr int64_t kDefaultResourceCap = 10'000'000;

/// The witness set S \ (qS* + S) itself, ascending. Enumeration is capped at
/// q*m_S + frobenius(S): any witness s has s - q*m_S not in S, hence
/// s - q*m_S <= frobenius(S). Throws ResourceLimit past `cap` elements.
std::vector<int64_t> gm_setdiff_bruteforce(const NumericalSemigroup& s, int64_t q,
                                           int64_t cap = kDefaultResourceCap);

/// #witnesses + 1. Internally computed twice: once as the literal set
/// difference and once by shifting elements by q*h over the minimal
/// generators; the two routes must agree.
int64_t gm_bruteforce(const NumericalSemigroup& s, int64_t q,
                      int64_t cap = kDefaultResourceCap);

/// The generator-shift route on its own (counts s in S with s - q*h not in S
/// for every minimal generator h, plus 1). Exposed for cross-checking.
int64_t gm_bruteforce_generator_route(const NumericalSemigroup& s, int64_t q,
                                      int64_t cap = kDefaultResourceCap);

}  // namespace semibound
