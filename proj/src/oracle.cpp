#include "semibound/oracle.hpp"

#include <stdexcept>

#include "semibound/arith.hpp"

namespace semibound {

namespace {

// Witnesses live in [0, q*m_S + frobenius]; see header.
int64_t enumeration_bound(const NumericalSemigroup& s, int64_t q, int64_t cap) {
  if (q < 1) throw DomainError("q must be >= 1");
  int64_t bound = checked_add(checked_mul(q, s.multiplicity()), s.frobenius());
  if (checked_add(bound, 1) > cap) throw ResourceLimit(bound + 1, cap);
  return bound;
}

}  // namespace

std::vector<int64_t> gm_setdiff_bruteforce(const NumericalSemigroup& s, int64_t q,
                                           int64_t cap) {
  int64_t bound = enumeration_bound(s, q, cap);
  std::vector<int64_t> elements = s.elements_up_to(bound);
  // Mark qa + b for nonzero a and arbitrary b, both in S, up to the bound.
  std::vector<char> shifted(static_cast<size_t>(bound) + 1, 0);
  for (int64_t a : elements) {
    if (a == 0) continue;
    if (a > bound / q) break;  // elements ascend; q*a already past the bound
    int64_t base = q * a;
    for (int64_t b : elements) {
      if (b > bound - base) break;
      shifted[static_cast<size_t>(base + b)] = 1;
    }
  }
  std::vector<int64_t> witnesses;
  for (int64_t e : elements)
    if (!shifted[static_cast<size_t>(e)]) witnesses.push_back(e);
  return witnesses;
}

int64_t gm_bruteforce_generator_route(const NumericalSemigroup& s, int64_t q,
                                      int64_t cap) {
  int64_t bound = enumeration_bound(s, q, cap);
  // Shifts q*h beyond the bound can never land back in [0, bound].
  std::vector<int64_t> shifts;
  for (int64_t h : s.minimal_generators())
    if (h <= bound / q) shifts.push_back(q * h);
  int64_t count = 0;
  for (int64_t e : s.elements_up_to(bound)) {
    bool witness = true;
    for (int64_t shift : shifts) {
      if (s.contains(e - shift)) {
        witness = false;
        break;
      }
    }
    if (witness) ++count;
  }
  return count + 1;
}

int64_t gm_bruteforce(const NumericalSemigroup& s, int64_t q, int64_t cap) {
  int64_t from_setdiff =
      static_cast<int64_t>(gm_setdiff_bruteforce(s, q, cap).size()) + 1;
  int64_t from_generators = gm_bruteforce_generator_route(s, q, cap);
  if (from_setdiff != from_generators)
    throw std::logic_error("oracle self-check failed: set-difference and "
                           "generator-shift routes disagree");
  return from_setdiff;
}

}  // namespace semibound
