#pragma once

// Checked 64-bit arithmetic and the floor/ceil/mod conventions used by every
// bound formula. mod_floor always lands in [0, n), and floor/ceil division
// round like the real-valued functions, also for negative numerators. All
// bounds are integers, so nothing here touches floating point.

#include <bit>
#include <cstdint>

#include "semibound/errors.hpp"

namespace semibound {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

// Floor division, divisor must be positive.
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Ceiling division, divisor must be positive.
inline int64_t ceil_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// Canonical residue in [0, n).
inline int64_t mod_floor(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline int64_t gcd_ll(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Exact floor square root, pure integer Newton iteration.
inline int64_t isqrt(int64_t value) {
  if (value < 0) throw DomainError("isqrt of a negative number");
  auto n = static_cast<uint64_t>(value);
  if (n < 2) return value;
  uint64_t x = uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  while (true) {
    uint64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return static_cast<int64_t>(x);
}

}  // namespace semibound
