#include "semibound/kummer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "semibound/arith.hpp"

namespace semibound {

namespace {

int64_t lambda_at(const KummerData& data, int64_t index) {
  return index == 0 ? kummer_lambda0(data)
                    : data.lambdas[static_cast<size_t>(index - 1)];
}

void validate_kummer(const KummerData& data) {
  if (data.m < 2) throw InvalidKummer("covering degree m must be >= 2");
  auto r = static_cast<int64_t>(data.lambdas.size());
  if (r < 2) throw InvalidKummer("need at least two branch points");
  if (r > data.q)
    throw InvalidKummer("more branch points than field elements (r > q)");
  for (int64_t lambda : data.lambdas)
    if (lambda < 1 || lambda > data.m - 1)
      throw InvalidKummer("exponents must lie in [1, m-1]");
  if (data.place_index < 0 || data.place_index > r)
    throw InvalidKummer("place index must lie in 0..r");
  int64_t ls = mod_floor(lambda_at(data, data.place_index), data.m);
  if (gcd_ll(data.m, ls) != 1)
    throw InvalidKummer("place is not totally ramified: gcd(m, lambda_s) != 1");
}

}  // namespace

KummerData make_kummer(int64_t q, int64_t m, std::vector<int64_t> lambdas,
                       int64_t place_index) {
  KummerData data{q, m, std::move(lambdas), place_index};
  validate_kummer(data);
  return data;
}

int64_t kummer_lambda0(const KummerData& data) {
  int64_t sum = 0;
  for (int64_t lambda : data.lambdas) sum = checked_add(sum, lambda);
  return -sum;
}

AperyTable kummer_apery(const KummerData& data) {
  validate_kummer(data);
  const int64_t m = data.m;
  const int64_t lambda0 = kummer_lambda0(data);
  const int64_t ls = lambda_at(data, data.place_index);
  std::vector<int64_t> least(static_cast<size_t>(m), -1);
  least[0] = 0;
  for (int64_t i = 1; i < m; ++i) {
    // beta(i) >= 0: the exponents sum to zero and the lambda_s term is never
    // an exact multiple of m, so the ceilings add up to at least 1.
    int64_t beta = checked_sub(ceil_div(checked_mul(i, lambda0), m), 1);
    for (int64_t lambda : data.lambdas)
      beta = checked_add(beta, ceil_div(checked_mul(i, lambda), m));
    int64_t residue = mod_floor(checked_mul(i, ls), m);
    least[static_cast<size_t>(residue)] =
        checked_add(checked_mul(m, beta), residue);
  }
  // gcd(m, lambda_s) = 1 makes i -> i*lambda_s mod m a bijection
  for (int64_t w : least)
    if (w < 0) throw std::logic_error("Apéry residue left unassigned");
  return AperyTable(m, std::move(least));
}

NumericalSemigroup weierstrass_semigroup(const KummerData& data) {
  const AperyTable table = kummer_apery(data);
  std::vector<int64_t> gens;
  gens.reserve(static_cast<size_t>(data.m));
  gens.push_back(data.m);
  for (int64_t i = 1; i < data.m; ++i) gens.push_back(table.least(i));
  NumericalSemigroup s(std::move(gens));
  return NumericalSemigroup(s.minimal_generators());
}

int64_t hws_bound(int64_t q, int64_t genus) {
  if (q < 2) throw DomainError("q must be >= 2");
  if (genus < 0) throw DomainError("genus must be >= 0");
  return checked_add(q + 1, checked_mul(genus, isqrt(checked_mul(4, q))));
}

int64_t ihara_bound(int64_t q, int64_t genus) {
  if (q < 2) throw DomainError("q must be >= 2");
  if (genus < 0) throw DomainError("genus must be >= 0");
  // (8q+1)g^2 + 4(q^2-q)g under the square root
  int64_t d = checked_add(
      checked_mul(checked_add(checked_mul(8, q), 1), checked_mul(genus, genus)),
      checked_mul(checked_mul(4, checked_sub(checked_mul(q, q), q)), genus));
  return checked_add(q + 1, floor_div(checked_sub(isqrt(d), genus), 2));
}

YLBound yl_bound_detail(const KummerData& data) {
  validate_kummer(data);
  const auto r = static_cast<int64_t>(data.lambdas.size());
  const int64_t width = data.m - 1;
  YLBound yl;
  yl.coprime_branch = gcd_ll(data.m, mod_floor(kummer_lambda0(data), data.m)) == 1;
  yl.upper_if_coprime =
      checked_add(data.q + 1, checked_mul(checked_sub(data.q, r), width));
  yl.upper_if_noncoprime =
      checked_add(data.q + 1, checked_mul(checked_sub(data.q + 1, r), width));
  yl.upper = yl.coprime_branch ? yl.upper_if_coprime : yl.upper_if_noncoprime;
  int64_t delta = yl.upper - (data.q + 1);
  yl.lower = std::max<int64_t>(0, data.q + 1 - delta);
  return yl;
}

int64_t yl_bound(const KummerData& data) { return yl_bound_detail(data).upper; }

IntervalSemigroup cmq_semigroup(int64_t m, int64_t r) {
  if (r != 2 && r != 3)
    throw InvalidCMQ("separable degree r must be 2 or 3");
  if (m < 2 || m % r != 1)
    throw InvalidCMQ("covering degree must satisfy m = r*t + 1 with t >= 1, m >= 2");
  return make_interval(m - m / r, m / r);
}

int64_t kummer_consecutive_bound(int64_t q, int64_t m, int64_t r) {
  cmq_semigroup(m, r);  // validates m and r
  if (q < 2 || m > q - 1)
    throw InvalidCMQ("need 2 <= m <= q - 1");
  int64_t scaled = checked_add(checked_mul(m, r - 1), 1);  // r times the smallest pole order
  if (checked_mul(q, scaled) % r != 0) throw InexactDivision();
  int64_t value = checked_mul(q, scaled) / r;
  value = checked_sub(value, ceil_div(checked_mul(2, scaled), checked_mul(q, r)));
  return checked_add(value, 2);
}

CurveBoundReport curve_report(const KummerData& data) {
  NumericalSemigroup s = weierstrass_semigroup(data);
  BoundReport gm = bound_report(s, GMQuery{data.q, GMMethod::Auto});
  YLBound yl = yl_bound_detail(data);
  return CurveBoundReport{std::move(s),
                          gm.genus,
                          gm.gm,
                          gm.lewittes,
                          hws_bound(data.q, gm.genus),
                          ihara_bound(data.q, gm.genus),
                          yl.upper,
                          yl,
                          gm.method_used};
}

}  // namespace semibound
