#include "semibound/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <utility>

#include "semibound/arith.hpp"

namespace semibound {

namespace {

// Least element of S per residue class mod n, by shortest-path relaxation:
// each generator h is a transition i -> (i+h) mod n of weight h, and the
// least element congruent to i is the least total weight of a walk from
// residue 0. Naive enumeration up to the Frobenius number would be circular,
// since the Frobenius number is itself read off this table.
std::vector<int64_t> shortest_residue_table(const std::vector<int64_t>& generators,
                                            int64_t n) {
  constexpr int64_t kUnreached = -1;
  std::vector<int64_t> dist(static_cast<size_t>(n), kUnreached);
  using Entry = std::pair<int64_t, int64_t>;  // (element, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  dist[0] = 0;
  frontier.emplace(0, 0);
  while (!frontier.empty()) {
    auto [d, r] = frontier.top();
    frontier.pop();
    if (d != dist[static_cast<size_t>(r)]) continue;
    for (int64_t h : generators) {
      int64_t nd = checked_add(d, h);
      int64_t nr = (r + h % n) % n;
      auto& slot = dist[static_cast<size_t>(nr)];
      if (slot == kUnreached || nd < slot) {
        slot = nd;
        frontier.emplace(nd, nr);
      }
    }
  }
  // gcd(generators) = 1 makes every residue reachable
  return dist;
}

}  // namespace

AperyTable::AperyTable(int64_t modulus, std::vector<int64_t> least)
    : modulus_(modulus), least_(std::move(least)) {
  if (modulus_ < 1 || least_.size() != static_cast<size_t>(modulus_))
    throw DomainError("Apéry table size must equal its modulus");
  if (least_[0] != 0) throw DomainError("Apéry table must have least(0) = 0");
  for (int64_t i = 0; i < modulus_; ++i) {
    int64_t w = least_[static_cast<size_t>(i)];
    if (w < 0 || w % modulus_ != i % modulus_)
      throw DomainError("Apéry table entry not congruent to its residue");
  }
}

struct NumericalSemigroup::Caches {
  std::once_flag apery_once;
  std::optional<AperyTable> apery;
  std::once_flag mingen_once;
  std::optional<std::vector<int64_t>> minimal;
};

NumericalSemigroup::NumericalSemigroup(std::vector<int64_t> generators)
    : generators_(std::move(generators)), caches_(std::make_shared<Caches>()) {
  if (generators_.empty()) throw EmptyGenerators();
  for (int64_t g : generators_)
    if (g < 1) throw ZeroGenerator();
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  int64_t g = 0;
  for (int64_t h : generators_) g = std::gcd(g, h);
  if (g != 1) throw NonCoprimeGenerators(g);
  multiplicity_ = generators_.front();
}

NumericalSemigroup make_semigroup(std::vector<int64_t> generators) {
  return NumericalSemigroup(std::move(generators));
}

const AperyTable& NumericalSemigroup::apery_at_multiplicity() const {
  std::call_once(caches_->apery_once, [this] {
    caches_->apery.emplace(multiplicity_,
                           shortest_residue_table(generators_, multiplicity_));
  });
  return *caches_->apery;
}

AperyTable NumericalSemigroup::apery_set(int64_t member) const {
  if (member < 1 || !contains(member)) throw NotAnElement(member);
  if (member == multiplicity_) return apery_at_multiplicity();
  return AperyTable(member, shortest_residue_table(generators_, member));
}

bool NumericalSemigroup::contains(int64_t value) const {
  if (value < 0) return false;
  const AperyTable& ap = apery_at_multiplicity();
  return value >= ap.least(value % multiplicity_);
}

int64_t NumericalSemigroup::genus() const {
  const AperyTable& ap = apery_at_multiplicity();
  int64_t gaps = 0;
  for (int64_t i = 0; i < multiplicity_; ++i)
    gaps = checked_add(gaps, ap.quotient(i));
  return gaps;
}

int64_t NumericalSemigroup::frobenius() const {
  const AperyTable& ap = apery_at_multiplicity();
  int64_t largest = *std::max_element(ap.least().begin(), ap.least().end());
  return largest - multiplicity_;  // -1 for S = N
}

const std::vector<int64_t>& NumericalSemigroup::minimal_generators() const {
  std::call_once(caches_->mingen_once, [this] {
    // Every minimal generator lies in {multiplicity} ∪ (Apéry set \ {0});
    // keep the candidates that are not a sum of two nonzero elements.
    const AperyTable& ap = apery_at_multiplicity();
    std::vector<int64_t> minimal;
    minimal.push_back(multiplicity_);
    for (int64_t i = 1; i < multiplicity_; ++i) {
      int64_t c = ap.least(i);
      bool decomposable = false;
      for (int64_t x = multiplicity_; x + x <= c; ++x) {
        if (contains(x) && contains(c - x)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    caches_->minimal.emplace(std::move(minimal));
  });
  return *caches_->minimal;
}

std::vector<int64_t> NumericalSemigroup::elements_up_to(int64_t bound) const {
  std::vector<int64_t> out;
  if (bound < 0) return out;
  for (int64_t s = 0; s <= bound; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return a.minimal_generators() == b.minimal_generators();
}

}  // namespace semibound
