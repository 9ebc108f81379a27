#pragma once

// Numerical semigroups <h_1,...,h_t> (gcd 1) and their fundamental
// invariants. Everything hangs off the Apéry table: for a nonzero member n,
// the table stores the least element of S in each residue class mod n.
// Membership, genus, Frobenius number and minimal generators all read off
// that table in O(1)/O(n).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "semibound/errors.hpp"

namespace semibound {

/// Apéry table of a nonzero member `modulus` of a semigroup S:
/// least(i) is the smallest element of S congruent to i mod modulus,
/// equivalently {s in S : s - modulus not in S} arranged by residue.
class AperyTable {
 public:
  AperyTable(int64_t modulus, std::vector<int64_t> least);

  int64_t modulus() const noexcept { return modulus_; }
  const std::vector<int64_t>& least() const noexcept { return least_; }
  int64_t least(int64_t residue) const { return least_.at(static_cast<size_t>(residue)); }

  /// (least(r) - r) / modulus: how many copies of the modulus sit below the
  /// class representative. Genus is the sum of these over all residues.
  int64_t quotient(int64_t residue) const {
    return (least(residue) - residue) / modulus_;
  }

  friend bool operator==(const AperyTable&, const AperyTable&) = default;

 private:
  int64_t modulus_;
  std::vector<int64_t> least_;
};

class NumericalSemigroup {
 public:
  /// Throws EmptyGenerators / ZeroGenerator / NonCoprimeGenerators.
  explicit NumericalSemigroup(std::vector<int64_t> generators);

  /// Sorted, deduplicated generators as given (not necessarily minimal).
  const std::vector<int64_t>& generators() const noexcept { return generators_; }

  /// Least nonzero element.
  int64_t multiplicity() const noexcept { return multiplicity_; }

  /// Apéry table at the multiplicity; built once, then shared.
  const AperyTable& apery_at_multiplicity() const;

  /// Apéry table at an arbitrary nonzero member. Throws NotAnElement.
  AperyTable apery_set(int64_t member) const;

  /// Membership test: s in S iff s >= least(s mod multiplicity).
  bool contains(int64_t value) const;

  /// Number of gaps #(N \ S).
  int64_t genus() const;

  /// Largest gap; -1 when S is all of N.
  int64_t frobenius() const;

  /// The unique minimal generating set S* \ (S* + S*).
  const std::vector<int64_t>& minimal_generators() const;

  /// All elements of S up to `bound`, ascending.
  std::vector<int64_t> elements_up_to(int64_t bound) const;

 private:
  struct Caches;

  std::vector<int64_t> generators_;
  int64_t multiplicity_ = 0;
  std::shared_ptr<Caches> caches_;
};

NumericalSemigroup make_semigroup(std::vector<int64_t> generators);

/// Semigroups are equal when they have the same elements, i.e. the same
/// minimal generating set.
bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b);
inline bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return !(a == b);
}

}  // namespace semibound
