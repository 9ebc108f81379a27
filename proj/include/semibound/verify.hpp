#pragma once

// Randomized cross-check of the closed Geil-Matsumoto formulas against the
// brute-force count. Drives the CLI `verify` subcommand and the equivalence
// tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semibound/oracle.hpp"

namespace semibound {

struct VerifyConfig {
  int64_t max_multiplicity = 12;
  int64_t max_q = 30;
  int64_t trials = 500;
  uint64_t seed = 42;
  int64_t resource_cap = kDefaultResourceCap;
};

struct Discrepancy {
  std::vector<int64_t> generators;
  int64_t q = 0;
  std::string formula;  // which closed form disagreed
  int64_t expected = 0; // brute-force value
  int64_t actual = 0;
};

/// Runs `trials` seeded random instances (multiplicity <= max_multiplicity,
/// at most 5 generators <= 60, q <= max_q) and compares gm_general plus any
/// applicable specialization against gm_bruteforce. Empty result means all
/// formulas agreed. Throws DomainError on a nonpositive trial count.
std::vector<Discrepancy> run_verification(const VerifyConfig& config);

}  // namespace semibound
