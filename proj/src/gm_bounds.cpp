#include "semibound/gm_bounds.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "semibound/arith.hpp"
#include "semibound/interval.hpp"
#include "semibound/oracle.hpp"

namespace semibound {

namespace {

void validate_q(int64_t q) {
  if (q < 1) throw DomainError("q must be >= 1");
}

// Does some element of S divide q? Enough to scan the divisors of q.
bool element_divides_q(const NumericalSemigroup& s, int64_t q) {
  for (int64_t d = 1; d <= q / d; ++d) {
    if (q % d != 0) continue;
    if (s.contains(d) || s.contains(q / d)) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(GMMethod method) {
  switch (method) {
    case GMMethod::General: return "general";
    case GMMethod::TwoGenerator: return "two-generator";
    case GMMethod::IntervalSum: return "interval-sum";
    case GMMethod::IntervalClosed: return "interval-closed";
    case GMMethod::Oracle: return "oracle";
    case GMMethod::Auto: return "auto";
  }
  return "unknown";
}

int64_t lewittes(const NumericalSemigroup& s, int64_t q) {
  validate_q(q);
  return checked_add(checked_mul(q, s.multiplicity()), 1);
}

int64_t gm_general(const NumericalSemigroup& s, int64_t q,
                   std::optional<int64_t> base) {
  validate_q(q);
  const int64_t n = base.value_or(s.multiplicity());
  const AperyTable table = s.apery_set(n);  // throws NotAnElement for bad base

  // Residues of a generating set: every minimal generator g equals
  // w(g mod n) + c*n, so S = <n, w(g mod n) : g generator>. Restricting the
  // inner minimum to these residues is an O(n*t) evaluation instead of O(n^2).
  std::vector<int64_t> residues;
  for (int64_t g : s.minimal_generators()) {
    int64_t r = g % n;
    if (r != 0) residues.push_back(r);
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());

  const int64_t ceiling = checked_mul(q, n);
  int64_t total = 0;
  for (int64_t k = 0; k < n; ++k) {
    int64_t best = ceiling;
    for (int64_t i : residues) {
      int64_t ki = mod_floor(k - checked_mul(i, q), n);
      int64_t term = checked_add(
          checked_sub(checked_mul(q, table.least(i)), table.least(k)),
          table.least(ki));
      assert(term >= 0);
      best = std::min(best, term);
    }
    total = checked_add(total, best);
  }
  assert(total % n == 0);
  return total / n + 1;
}

int64_t gm_two_generators(int64_t a, int64_t b, int64_t q) {
  validate_q(q);
  if (a < 1 || b < 1) throw ZeroGenerator();
  if (int64_t g = gcd_ll(a, b); g != 1) throw NonCoprimeGenerators(g);
  int64_t total = 0;
  for (int64_t k = 0; k < a; ++k) {
    int64_t term = checked_mul(ceil_div(q - k, a), b);
    total = checked_add(total, std::min(q, term));
  }
  return checked_add(total, 1);
}

bool gm_equals_lewittes(const NumericalSemigroup& s, int64_t q) {
  validate_q(q);
  const int64_t m = s.multiplicity();
  if (m == 1) return true;  // both bounds are q + 1 on the full set
  // m | q - 1 forces equality only for q >= 2; at q = 1 the GM count is 2
  // while the Lewittes bound is m + 1
  if (q > 1 && (q - 1) % m == 0) return true;
  if (element_divides_q(s, q)) return true;
  const AperyTable& table = s.apery_at_multiplicity();
  for (int64_t i = 1; i < m; ++i) {
    int64_t lhs = checked_mul(q, checked_sub(table.least(i), m));
    if (lhs < table.least(mod_floor(checked_mul(q, i), m))) return false;
  }
  return true;
}

BoundReport bound_report(const NumericalSemigroup& s, const GMQuery& query) {
  validate_q(query.q);
  const int64_t q = query.q;
  const std::vector<int64_t>& minimal = s.minimal_generators();
  const std::optional<IntervalSemigroup> interval = detect_interval(s);

  GMMethod method = query.method;
  if (method == GMMethod::Auto) {
    if (minimal.size() == 2) {
      method = GMMethod::TwoGenerator;
    } else if (interval) {
      method = interval->t >= ceil_div(interval->n - 1, 2)
                   ? GMMethod::IntervalClosed
                   : GMMethod::IntervalSum;
    } else {
      method = GMMethod::General;
    }
  }

  int64_t gm = 0;
  switch (method) {
    case GMMethod::General:
      gm = gm_general(s, q);
      break;
    case GMMethod::TwoGenerator:
      if (minimal.size() > 2)
        throw MethodNotApplicable("semigroup has more than two minimal generators");
      gm = minimal.size() == 1 ? gm_two_generators(minimal[0], minimal[0], q)
                               : gm_two_generators(minimal[0], minimal[1], q);
      break;
    case GMMethod::IntervalSum:
      if (!interval)
        throw MethodNotApplicable("minimal generators are not consecutive");
      gm = gm_interval_sum(interval->n, interval->t, q);
      break;
    case GMMethod::IntervalClosed:
      if (!interval)
        throw MethodNotApplicable("minimal generators are not consecutive");
      gm = interval->t == 1 ? gm_two_generators(interval->n, interval->n + 1, q)
                            : gm_interval_closed(interval->n, interval->t, q);
      break;
    case GMMethod::Oracle:
      gm = gm_bruteforce(s, q, query.resource_cap);
      break;
    case GMMethod::Auto:
      throw MethodNotApplicable("auto should have been resolved");
  }

  BoundReport report;
  report.gm = gm;
  report.lewittes = lewittes(s, q);
  report.equal = report.gm == report.lewittes;
  report.method_used = method;
  report.genus = s.genus();
  return report;
}

}  // namespace semibound
