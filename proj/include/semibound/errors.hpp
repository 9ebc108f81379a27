#pragma once

#include <stdexcept>
#include <string>

namespace semibound {

// Base of everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: rejected before any computation starts. CLI exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// Computation gave up: 64-bit overflow or a resource cap. CLI exit code 3.
struct ComputeError : Error {
  using Error::Error;
};

struct EmptyGenerators : ValidationError {
  EmptyGenerators() : ValidationError("generator list is empty") {}
};

struct ZeroGenerator : ValidationError {
  ZeroGenerator() : ValidationError("generators must be positive integers") {}
};

struct NonCoprimeGenerators : ValidationError {
  explicit NonCoprimeGenerators(long long gcd)
      : ValidationError("generators have gcd " + std::to_string(gcd) +
                        "; a numerical semigroup needs gcd 1") {}
};

struct NotAnElement : ValidationError {
  explicit NotAnElement(long long value)
      : ValidationError(std::to_string(value) +
                        " is not a nonzero element of the semigroup") {}
};

struct InvalidInterval : ValidationError {
  InvalidInterval(long long n, long long t)
      : ValidationError("interval semigroup needs 1 <= t < n, got n=" +
                        std::to_string(n) + " t=" + std::to_string(t)) {}
};

// Closed interval formulas only cover ceil((n-1)/2) <= t < n.
struct IntervalOutOfRange : ValidationError {
  IntervalOutOfRange(long long n, long long t)
      : ValidationError("closed interval formulas need ceil((n-1)/2) <= t, got n=" +
                        std::to_string(n) + " t=" + std::to_string(t)) {}
};

// t = 1: use gm_two_generators(n, n+1, q) instead.
struct DegenerateT : ValidationError {
  DegenerateT()
      : ValidationError(
            "t = 1 is out of scope for the closed interval formula; "
            "use the two-generator formula on <n, n+1>") {}
};

struct InvalidKummer : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidCMQ : ValidationError {
  using ValidationError::ValidationError;
};

struct MethodNotApplicable : ValidationError {
  using ValidationError::ValidationError;
};

// Catch-all for simple precondition violations (q < 1 and the like).
struct DomainError : ValidationError {
  using ValidationError::ValidationError;
};

struct ArithmeticOverflow : ComputeError {
  ArithmeticOverflow() : ComputeError("64-bit integer overflow") {}
};

struct ResourceLimit : ComputeError {
  ResourceLimit(long long needed, long long cap)
      : ComputeError("enumeration needs " + std::to_string(needed) +
                     " elements, above the cap " + std::to_string(cap)) {}
};

struct InexactDivision : ComputeError {
  InexactDivision() : ComputeError("expected an exact integer division") {}
};

}  // namespace semibound
