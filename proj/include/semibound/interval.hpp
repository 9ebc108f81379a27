#pragma once

// Geil-Matsumoto bounds for semigroups generated by consecutive integers
// <n, n+1, ..., n+t> with 1 <= t < n. The Apéry table has the closed form
// least(k) = ceil(k/t)*n + k, which collapses the general bound to a sum of
// clamped terms
//
//   C(k,i) = q - ceil(k/t) + ceil(k_i/t) + ceil((i*q-k)/n),  k_i = (k-i*q) mod n,
//
// and, for ceil((n-1)/2) <= t, to fully closed formulas. Three evaluation
// layers are kept separate on purpose (term sum, exceptional-residue count,
// closed cases) so they can cross-check each other.

#include <cstdint>
#include <optional>
#include <vector>

#include "semibound/semigroup.hpp"

namespace semibound {

struct IntervalSemigroup {
  int64_t n = 0;  // smallest generator
  int64_t t = 0;  // number of extra consecutive generators, 1 <= t < n

  friend bool operator==(const IntervalSemigroup&, const IntervalSemigroup&) = default;
};

/// Throws InvalidInterval unless 1 <= t < n.
IntervalSemigroup make_interval(int64_t n, int64_t t);

NumericalSemigroup interval_to_semigroup(const IntervalSemigroup& iv);

/// The interval semigroup whose minimal generators match `s`, if any.
std::optional<IntervalSemigroup> detect_interval(const NumericalSemigroup& s);

/// Apéry table of n in <n..n+t>: least(k) = ceil(k/t)*n + k.
AperyTable apery_interval(int64_t n, int64_t t);

/// One residue row of the term sum: the shifted residues k_i and the raw
/// C(k,i) values for i = 1..t.
struct IntervalGMTerms {
  int64_t k = 0;
  std::vector<int64_t> shifted_residues;  // k_i = (k - i*q) mod n
  std::vector<int64_t> terms;             // C(k,i), unclamped
};

IntervalGMTerms interval_terms(int64_t n, int64_t t, int64_t q, int64_t k);

/// Clamped term values min{q, C(k,i)} and their minimum over i.
int64_t interval_term(int64_t n, int64_t t, int64_t q, int64_t k, int64_t i);
int64_t interval_min_term(int64_t n, int64_t t, int64_t q, int64_t k);

/// Residues t < k <= n-1 that lose exactly one unit versus the generic case:
/// k with t >= (k mod q) and q not dividing k, together with k <= q*t - n
/// with q | (k+n) and q not dividing k. Needs ceil((n-1)/2) <= t.
std::vector<int64_t> interval_exceptional_residues(int64_t n, int64_t t, int64_t q);

/// Term-sum evaluation; valid for every 1 <= t < n and q >= 1.
int64_t gm_interval_sum(int64_t n, int64_t t, int64_t q);

/// q*n + floor(t/q) - 2*ceil(n/q) - #exceptional + 3; needs ceil((n-1)/2) <= t.
int64_t gm_interval_setA(int64_t n, int64_t t, int64_t q);

/// Fully closed three-case formula; needs ceil((n-1)/2) <= t and t != 1
/// (throws DegenerateT for t = 1: use gm_two_generators(n, n+1, q)).
int64_t gm_interval_closed(int64_t n, int64_t t, int64_t q);

/// q in <n..n+t> iff (q mod n) <= floor(q/n)*t. Doubles as the test for the
/// Geil-Matsumoto and Lewittes bounds to coincide on interval semigroups.
bool interval_contains_q(int64_t n, int64_t t, int64_t q);

}  // namespace semibound
