#include "affrep/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "affrep/error.hpp"

namespace affrep {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> coeffs(power + 1);
  coeffs[power] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Integer IntPoly::leading_coeff() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly run() {
    std::vector<Integer> coeffs;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, power] = term();
      if (coeffs.size() <= power) coeffs.resize(power + 1);
      coeffs[power] += sign * c;
      skip_ws();
    }
    return IntPoly(std::move(coeffs));
  }

 private:
  std::pair<Integer, std::size_t> term() {
    Integer c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = Integer(digits());
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {c, 0};
      }
    }
    if (peek() != 'q') fail(have_coeff ? "expected 'q' after '*'" : "expected a term");
    ++pos_;
    skip_ws();
    std::size_t power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      power = std::stoul(digits());
    }
    return {c, power};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) { return PolyParser(text).run(); }

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

IntPoly exact_div(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_div by the zero polynomial");
  if (dividend.is_zero()) return {};
  const std::size_t n = *dividend.degree();
  const std::size_t d = *divisor.degree();
  if (n < d) {
    throw Error(ErrorKind::NotDivisible,
                "(" + dividend.to_string() + ") / (" + divisor.to_string() + "): degree too small");
  }
  std::vector<Integer> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<Integer> quot(n - d + 1);
  const Integer& lead = divisor.coeffs()[d];
  for (std::size_t k = n - d + 1; k-- > 0;) {
    const Integer& top = rem[k + d];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, "(" + dividend.to_string() + ") / (" +
                                               divisor.to_string() + "): non-integral quotient");
    }
    Integer qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= d; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), divisor.coeffs()[j].get_mpz_t());
    }
    quot[k] = std::move(qk);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
    throw Error(ErrorKind::NotDivisible,
                "(" + dividend.to_string() + ") / (" + divisor.to_string() + "): nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> RatPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPoly> RatPoly::to_int_poly() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<IntPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = IntPoly::constant(1);
  return m;
}

const IntPoly& PolyMatrix::at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
IntPoly& PolyMatrix::at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " times " +
                    std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
  PolyMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      IntPoly acc;
      for (std::size_t k = 0; k < lhs.cols(); ++k) acc += lhs.at(i, k) * rhs.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix operator*(const IntPoly& scalar, const PolyMatrix& m) {
  std::vector<IntPoly> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(scalar * e);
  return PolyMatrix(m.rows(), m.cols(), std::move(entries));
}

PolyMatrix pow(const PolyMatrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "power of a non-square matrix");
  PolyMatrix result = PolyMatrix::identity(m.rows());
  PolyMatrix square = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

PolyMatrix exact_div(const PolyMatrix& m, const IntPoly& divisor) {
  std::vector<IntPoly> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(exact_div(e, divisor));
  return PolyMatrix(m.rows(), m.cols(), std::move(entries));
}

}  // namespace affrep
