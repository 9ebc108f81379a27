#include "semibound/interval.hpp"

#include <algorithm>

#include "semibound/arith.hpp"

namespace semibound {

namespace {

void validate_interval(int64_t n, int64_t t) {
  if (t < 1 || t >= n) throw InvalidInterval(n, t);
}

void validate_q(int64_t q) {
  if (q < 1) throw DomainError("q must be >= 1");
}

void require_closed_range(int64_t n, int64_t t) {
  if (t < ceil_div(n - 1, 2)) throw IntervalOutOfRange(n, t);
}

}  // namespace

IntervalSemigroup make_interval(int64_t n, int64_t t) {
  validate_interval(n, t);
  return IntervalSemigroup{n, t};
}

NumericalSemigroup interval_to_semigroup(const IntervalSemigroup& iv) {
  std::vector<int64_t> gens;
  gens.reserve(static_cast<size_t>(iv.t) + 1);
  for (int64_t g = iv.n; g <= checked_add(iv.n, iv.t); ++g) gens.push_back(g);
  return NumericalSemigroup(std::move(gens));
}

std::optional<IntervalSemigroup> detect_interval(const NumericalSemigroup& s) {
  const std::vector<int64_t>& gens = s.minimal_generators();
  if (gens.size() < 2) return std::nullopt;
  for (size_t i = 1; i < gens.size(); ++i)
    if (gens[i] != gens[i - 1] + 1) return std::nullopt;
  // a minimal consecutive run automatically has t < n
  return IntervalSemigroup{gens.front(),
                           static_cast<int64_t>(gens.size()) - 1};
}

AperyTable apery_interval(int64_t n, int64_t t) {
  validate_interval(n, t);
  std::vector<int64_t> least(static_cast<size_t>(n));
  for (int64_t k = 0; k < n; ++k)
    least[static_cast<size_t>(k)] = checked_add(checked_mul(ceil_div(k, t), n), k);
  return AperyTable(n, std::move(least));
}

namespace {

int64_t raw_term(int64_t n, int64_t t, int64_t q, int64_t k, int64_t i) {
  int64_t ki = mod_floor(k - checked_mul(i, q), n);
  int64_t value = checked_add(checked_sub(q, ceil_div(k, t)), ceil_div(ki, t));
  return checked_add(value, ceil_div(checked_sub(checked_mul(i, q), k), n));
}

}  // namespace

IntervalGMTerms interval_terms(int64_t n, int64_t t, int64_t q, int64_t k) {
  validate_interval(n, t);
  validate_q(q);
  if (k < 0 || k >= n) throw DomainError("residue k must lie in [0, n)");
  IntervalGMTerms row;
  row.k = k;
  for (int64_t i = 1; i <= t; ++i) {
    row.shifted_residues.push_back(mod_floor(k - checked_mul(i, q), n));
    row.terms.push_back(raw_term(n, t, q, k, i));
  }
  return row;
}

int64_t interval_term(int64_t n, int64_t t, int64_t q, int64_t k, int64_t i) {
  return std::min(q, raw_term(n, t, q, k, i));
}

int64_t interval_min_term(int64_t n, int64_t t, int64_t q, int64_t k) {
  int64_t best = q;
  for (int64_t i = 1; i <= t; ++i)
    best = std::min(best, interval_term(n, t, q, k, i));
  return best;
}

int64_t gm_interval_sum(int64_t n, int64_t t, int64_t q) {
  validate_interval(n, t);
  validate_q(q);
  int64_t total = 0;
  for (int64_t k = 0; k < n; ++k)
    total = checked_add(total, interval_min_term(n, t, q, k));
  return checked_add(total, 1);
}

std::vector<int64_t> interval_exceptional_residues(int64_t n, int64_t t, int64_t q) {
  validate_interval(n, t);
  validate_q(q);
  require_closed_range(n, t);
  std::vector<int64_t> out;
  int64_t shifted_cap = checked_sub(checked_mul(q, t), n);  // k <= q*t - n branch
  for (int64_t k = t + 1; k <= n - 1; ++k) {
    if (k % q == 0) continue;
    if (t >= k % q || (k <= shifted_cap && (k + n) % q == 0)) out.push_back(k);
  }
  return out;
}

int64_t gm_interval_setA(int64_t n, int64_t t, int64_t q) {
  validate_interval(n, t);
  validate_q(q);
  require_closed_range(n, t);
  if (q == 1) return 2;  // every nonzero element is a shifted element at q = 1
  auto exceptional = static_cast<int64_t>(interval_exceptional_residues(n, t, q).size());
  int64_t value = checked_mul(q, n);
  value = checked_add(value, t / q);
  value = checked_sub(value, 2 * ceil_div(n, q));
  value = checked_sub(value, exceptional);
  return checked_add(value, 3);
}

int64_t gm_interval_closed(int64_t n, int64_t t, int64_t q) {
  validate_interval(n, t);
  validate_q(q);
  require_closed_range(n, t);
  if (t == 1) throw DegenerateT();
  if (q == 1) return 2;
  if (t == n - 1)  // ordinary semigroup: no exceptional residues
    return checked_add(checked_sub(checked_mul(q, n), ceil_div(n, q)), 2);
  // the three q ranges partition q >= 2 exactly when t + 1 < n
  if (q <= t + 1) {
    int64_t value = checked_mul(q - 1, n);
    return checked_add(checked_sub(value, ceil_div(n, q)), 3 + t);
  }
  if (q <= n - 1) {
    int64_t tn = floor_div(checked_add(t, n), q);
    int64_t value = checked_add(checked_mul(q - 1, n), q + 4);
    value = checked_sub(value, 2 * ceil_div(n, q));
    value = checked_add(value, tn);
    return checked_sub(value, std::max(tn, std::min(1 + n / q, t)));
  }
  int64_t value = checked_mul(q, n);
  value = checked_sub(value, ceil_div(checked_mul(2, n), q));
  value = checked_add(value, floor_div(checked_add(t, n), q));
  return checked_add(value, 2);
}

bool interval_contains_q(int64_t n, int64_t t, int64_t q) {
  validate_interval(n, t);
  validate_q(q);
  return q % n <= checked_mul(q / n, t);
}

}  // namespace semibound
