#pragma once

// Exact univariate polynomials in the Lefschetz variable q, over the
// integers (IntPoly) and the rationals (RatPoly), plus small dense matrices
// of IntPoly. Every value is normalized: no trailing zero coefficients, and
// the zero polynomial holds no coefficients at all.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace affrep {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t power);
  // The variable q itself.
  static IntPoly variable();

  // Reads the canonical text form produced by to_string(), e.g.
  // "q^7 - 4*q^6 + 6*q^5 - 3*q^4". Throws Error(ParseError).
  static IntPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  // Coefficient of q^power; zero past the degree.
  Integer coeff(std::size_t power) const;
  // Zero for the zero polynomial.
  Integer leading_coeff() const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  Integer eval(const Integer& x) const;
  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  friend IntPoly operator*(const Integer& lhs, IntPoly rhs) { return rhs *= lhs; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs);

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly pow(const IntPoly& base, unsigned exponent);

// Returns c with divisor * c == dividend. Throws Error(DivisionByZero) for a
// zero divisor and Error(NotDivisible) when the remainder is nonzero or an
// intermediate quotient coefficient is not an integer.
IntPoly exact_div(const IntPoly& dividend, const IntPoly& divisor);

// Polynomial with rational coefficients; used as the working form of
// interpolation before the integrality check.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  Rational eval(const Rational& x) const;

  // nullopt if some coefficient has a denominator other than 1.
  std::optional<IntPoly> to_int_poly() const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& scalar);
  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
  friend RatPoly operator*(RatPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

// Dense row-major matrix of IntPoly.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<IntPoly> entries);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const IntPoly& at(std::size_t r, std::size_t c) const;
  IntPoly& at(std::size_t r, std::size_t c);
  std::span<const IntPoly> entries() const noexcept { return entries_; }

  friend bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<IntPoly> entries_;
};

// Throws Error(DimensionMismatch) when lhs.cols() != rhs.rows().
PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
PolyMatrix operator*(const IntPoly& scalar, const PolyMatrix& m);

// Binary exponentiation; pow(m, 0) is the identity. Throws
// Error(DimensionMismatch) for non-square input.
PolyMatrix pow(const PolyMatrix& m, unsigned exponent);

// Entry-wise exact division.
PolyMatrix exact_div(const PolyMatrix& m, const IntPoly& divisor);

}  // namespace affrep
