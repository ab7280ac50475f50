#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affrep {

enum class ErrorKind {
  NotDivisible,
  DivisionByZero,
  DimensionMismatch,
  NotPrime,
  OrderTooLarge,
  FieldMismatch,
  InverseOfZero,
  NotIrreducible,
  BudgetExceeded,
  InvalidGroupTable,
  DuplicateAbscissa,
  NonIntegerCoefficients,
  ExtraPointMismatch,
  InternalConsistency,
  ZeroB,
  GenusOutOfRange,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace affrep
