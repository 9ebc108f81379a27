#pragma once

// Lewittes and Geil-Matsumoto upper bounds for numerical semigroups.
//
//   L_q(S)  = q * multiplicity + 1
//   GM_q(S) = #(S \ (qS* + S)) + 1
//
// GM_q is evaluated through the Apéry-set closed formula
//
//   GM_q(S) = 1 + (1/n) * sum_k min_i { q*n, q*w(i) - w(k) + w(k_i) },
//
// with w the Apéry table at some nonzero member n, k_i = (k - i*q) mod n,
// and i ranging over the residues of a generating set. Specializations: a
// direct formula for two coprime generators, and the interval formulas from
// interval.hpp, picked automatically by bound_report.

#include <cstdint>
#include <optional>
#include <string_view>

#include "semibound/oracle.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

enum class GMMethod { General, TwoGenerator, IntervalSum, IntervalClosed, Oracle, Auto };

std::string_view to_string(GMMethod method);

struct GMQuery {
  int64_t q = 1;
  GMMethod method = GMMethod::Auto;
  int64_t resource_cap = kDefaultResourceCap;  // only the Oracle method enumerates
};

struct BoundReport {
  int64_t gm = 0;
  int64_t lewittes = 0;
  bool equal = false;
  GMMethod method_used = GMMethod::General;
  int64_t genus = 0;
};

/// q * multiplicity + 1.
int64_t lewittes(const NumericalSemigroup& s, int64_t q);

/// Apéry-set evaluation of GM_q(S). `base` defaults to the multiplicity;
/// any nonzero member gives the same value (throws NotAnElement otherwise).
int64_t gm_general(const NumericalSemigroup& s, int64_t q,
                   std::optional<int64_t> base = std::nullopt);

/// GM_q(<a,b>) = 1 + sum_{k=0}^{a-1} min{q, ceil((q-k)/a) * b} for coprime
/// a, b (in either order; a = b = 1 gives the full set of nonnegatives).
int64_t gm_two_generators(int64_t a, int64_t b, int64_t q);

/// GM_q(S) == L_q(S), decided without computing either bound: true iff
/// q*(w(i) - m) >= w((q*i) mod m) for every residue i at the multiplicity m.
/// Fast paths: some element of S divides q, or m divides q - 1.
bool gm_equals_lewittes(const NumericalSemigroup& s, int64_t q);

/// Evaluates GM and Lewittes with the requested method. Auto picks
/// TwoGenerator for two minimal generators, the interval formulas for
/// consecutive runs (closed form when ceil((n-1)/2) <= t, term sum
/// otherwise), and the general formula for everything else.
BoundReport bound_report(const NumericalSemigroup& s, const GMQuery& query);

}  // namespace semibound
