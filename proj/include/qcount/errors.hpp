#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcount {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Polynomial division left a nonzero remainder or a fractional coefficient.
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(const std::string& what) : Error(what) {}
};

/// Inversion of zero in a prime field.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A permutation moved a point outside its declared degree.
class DomainViolation : public Error {
 public:
  explicit DomainViolation(const std::string& what) : Error(what) {}
};

/// A permutation has a descent outside the allowed cut set.
class DescentViolation : public Error {
 public:
  explicit DescentViolation(const std::string& what) : Error(what) {}
};

/// A star filling does not match the weight of its shape.
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// An enumeration would exceed the configured object budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// An alternating sum produced a negative coefficient; signals a bug,
/// the quantity is a generating function and must be nonnegative.
class NegativeCoefficient : public Error {
 public:
  explicit NegativeCoefficient(const std::string& what) : Error(what) {}
};

/// Caps for the enumeration-backed routes.  Counting and streaming
/// operations refuse up front (BudgetExceeded) instead of running away.
struct Budget {
  /// Maximum number of objects an enumeration may produce.
  std::int64_t max_objects = 10'000'000;
  /// Maximum n for permutation-statistic routes.
  int max_perm_n = 14;
};

}  // namespace qcount
