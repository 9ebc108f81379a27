#pragma once

// Weierstrass semigroups of Kummer covers y^m = prod (x - a_k)^{lambda_k}
// at a totally ramified place, and the rational-point upper bounds evaluated
// on them: Geil-Matsumoto, Lewittes, Hasse-Weil-Serre, Ihara, Yoo-Lee.
// Everything is exact 64-bit integer arithmetic; square roots go through
// isqrt so floor expressions cannot be off by one.

#include <cstdint>
#include <vector>

#include "semibound/gm_bounds.hpp"
#include "semibound/interval.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

/// Parameters of the cover y^m = prod_{k=1}^{r} (x - a_k)^{lambda_k} over a
/// field with q elements, with a distinguished totally ramified place above
/// x = a_s (s in 1..r) or above the pole of x (s = 0, exponent
/// lambda_0 = -sum lambda_k). q is treated as a plain positive integer;
/// whether it is a prime power is the caller's business.
struct KummerData {
  int64_t q = 0;
  int64_t m = 0;                 // covering degree, >= 2
  std::vector<int64_t> lambdas;  // lambda_1..lambda_r, each in [1, m-1], r >= 2
  int64_t place_index = 1;       // s in 0..r with gcd(m, lambda_s mod m) = 1
};

/// Validates all KummerData invariants; throws InvalidKummer.
KummerData make_kummer(int64_t q, int64_t m, std::vector<int64_t> lambdas,
                       int64_t place_index);

/// -sum of the exponents.
int64_t kummer_lambda0(const KummerData& data);

/// Apéry table of m in the Weierstrass semigroup at the distinguished place:
/// for each i in 1..m-1 the class (i*lambda_s mod m) has least element
/// m*beta(i) + (i*lambda_s mod m), with beta(i) = sum_k ceil(i*lambda_k/m) - 1
/// over k = 0..r.
AperyTable kummer_apery(const KummerData& data);

/// The Weierstrass semigroup itself, generated by m and the table values.
NumericalSemigroup weierstrass_semigroup(const KummerData& data);

/// q + 1 + genus * floor(2*sqrt(q)); needs q >= 2.
int64_t hws_bound(int64_t q, int64_t genus);

/// Largest N with 2*(N - q - 1) + g <= sqrt((8q+1)g^2 + 4(q^2-q)g); q >= 2.
int64_t ihara_bound(int64_t q, int64_t genus);

struct YLBound {
  int64_t upper = 0;           // q + 1 + delta for the applicable branch
  int64_t lower = 0;           // max(0, q + 1 - delta)
  bool coprime_branch = false; // gcd(m, lambda_0 mod m) == 1
  int64_t upper_if_coprime = 0;     // q + 1 + (q - r)(m - 1)
  int64_t upper_if_noncoprime = 0;  // q + 1 + (q + 1 - r)(m - 1)
};

/// Two-sided Yoo-Lee bound |N - (q+1)| <= delta with
/// delta = (q - r)(m - 1) when gcd(m, lambda_0 mod m) = 1,
/// delta = (q + 1 - r)(m - 1) otherwise. Both branch values are recorded.
YLBound yl_bound_detail(const KummerData& data);

/// Upper half of the Yoo-Lee bound.
int64_t yl_bound(const KummerData& data);

/// Weierstrass semigroup <m - floor(m/r), ..., m> of a totally ramified
/// place (other than the pole of x) on y^m = f(x) with f separable of
/// degree r in {2, 3} and m = r*t + 1. Throws InvalidCMQ.
IntervalSemigroup cmq_semigroup(int64_t m, int64_t r);

/// 2 + q*(m*r - m + 1)/r - ceil(2*(m*r - m + 1)/(q*r)) for the curves of
/// cmq_semigroup with 2 <= m <= q - 1; agrees with the closed interval
/// formula on <m - floor(m/r), ..., m>.
int64_t kummer_consecutive_bound(int64_t q, int64_t m, int64_t r);

struct CurveBoundReport {
  NumericalSemigroup semigroup;  // minimal generators of the Weierstrass semigroup
  int64_t genus = 0;
  int64_t gm = 0;
  int64_t lewittes = 0;
  int64_t hws = 0;
  int64_t ihara = 0;
  int64_t yl = 0;
  YLBound yl_detail;
  GMMethod gm_method = GMMethod::General;
};

/// All five bounds for one cover.
CurveBoundReport curve_report(const KummerData& data);

}  // namespace semibound
