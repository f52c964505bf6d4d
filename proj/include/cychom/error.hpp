#pragma once

#include <stdexcept>
#include <string>

namespace cychom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition does not hold (constant term, parameter range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result that must be integral came out with a non-integer coefficient.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// A three-variable series is not divisible by 1+xy. Carries the first bad slot.
class DivisibilityError : public Error {
 public:
  DivisibilityError(int n, int q, int sign)
      : Error("not divisible by 1+xy: inconsistent slot (n=" + std::to_string(n) +
              ", q=" + std::to_string(q) + ", e=" + std::to_string(sign) + ")"),
        n(n),
        q(q),
        sign(sign) {}
  int n;
  int q;
  int sign;
};

/// Malformed presentation or homology-table input.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A chain-complex identity failed on an assembled block; indicates a sign bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cychom
