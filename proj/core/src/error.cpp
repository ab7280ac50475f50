#include "affrep/error.hpp"

namespace affrep {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InverseOfZero: return "InverseOfZero";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorKind::ExtraPointMismatch: return "ExtraPointMismatch";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::ZeroB: return "ZeroB";
    case ErrorKind::GenusOutOfRange: return "GenusOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace affrep
