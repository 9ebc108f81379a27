#include "semibound/verify.hpp"

#include <numeric>
#include <random>

#include "semibound/arith.hpp"
#include "semibound/gm_bounds.hpp"
#include "semibound/interval.hpp"

namespace semibound {

namespace {

// uniform_int_distribution is implementation-defined; plain modulo reduction
// keeps seeded runs reproducible across standard libraries.
int64_t draw(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

NumericalSemigroup random_semigroup(std::mt19937_64& rng, int64_t max_mult) {
  constexpr int64_t kMaxGenerator = 60;
  while (true) {
    std::vector<int64_t> gens;
    gens.push_back(max_mult == 1 ? 1 : draw(rng, 2, max_mult));
    int64_t extra = draw(rng, 1, 4);  // at most 5 generators in total
    for (int64_t i = 0; i < extra; ++i)
      gens.push_back(draw(rng, gens.front(), kMaxGenerator));
    int64_t g = 0;
    for (int64_t h : gens) g = std::gcd(g, h);
    if (g == 1) return NumericalSemigroup(std::move(gens));
  }
}

}  // namespace

std::vector<Discrepancy> run_verification(const VerifyConfig& config) {
  if (config.trials < 1) throw DomainError("trial count must be >= 1");
  if (config.max_multiplicity < 1) throw DomainError("max multiplicity must be >= 1");
  if (config.max_q < 1) throw DomainError("max q must be >= 1");

  std::mt19937_64 rng(config.seed);
  std::vector<Discrepancy> discrepancies;
  auto record = [&](const NumericalSemigroup& s, int64_t q, const char* formula,
                    int64_t expected, int64_t actual) {
    if (expected != actual)
      discrepancies.push_back({s.generators(), q, formula, expected, actual});
  };

  for (int64_t trial = 0; trial < config.trials; ++trial) {
    NumericalSemigroup s = random_semigroup(rng, config.max_multiplicity);
    int64_t q = draw(rng, 1, config.max_q);
    int64_t truth = gm_bruteforce(s, q, config.resource_cap);

    record(s, q, "gm_general", truth, gm_general(s, q));

    const std::vector<int64_t>& minimal = s.minimal_generators();
    if (minimal.size() == 2)
      record(s, q, "gm_two_generators", truth,
             gm_two_generators(minimal[0], minimal[1], q));

    if (auto iv = detect_interval(s)) {
      record(s, q, "gm_interval_sum", truth, gm_interval_sum(iv->n, iv->t, q));
      if (iv->t != 1 && iv->t >= ceil_div(iv->n - 1, 2)) {
        record(s, q, "gm_interval_setA", truth,
               gm_interval_setA(iv->n, iv->t, q));
        record(s, q, "gm_interval_closed", truth,
               gm_interval_closed(iv->n, iv->t, q));
      }
    }
  }
  return discrepancies;
}

}  // namespace semibound
