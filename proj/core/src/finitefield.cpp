#include "affrep/finitefield.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "affrep/error.hpp"

namespace affrep::ff {

namespace {

void trim(ResiduePoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of a by a monic b over F_p.
ResiduePoly poly_mod(ResiduePoly a, const ResiduePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = static_cast<Residue>((a[shift + j] + p - (lead * b[j]) % p) % p);
    }
    trim(a);
  }
  return a;
}

// Advances coeffs as a base-p counter, low index fastest; false on wrap.
bool next_coeffs(ResiduePoly& coeffs, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    if (++coeffs[i] < p) return true;
    coeffs[i] = 0;
  }
  return false;
}

void check_same_field(const FqElem& lhs, const FqElem& rhs) {
  if (lhs.field() != rhs.field() && *lhs.field() != *rhs.field()) {
    throw Error(ErrorKind::FieldMismatch,
                "operands from " + lhs.field()->descriptor() + " [" + lhs.field()->modulus_string() +
                    "] and " + rhs.field()->descriptor() + " [" + rhs.field()->modulus_string() + "]");
  }
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, ResiduePoly modulus)
    : p_(p), n_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)), order_(1) {
  for (unsigned i = 0; i < n_; ++i) order_ *= p_;
}

std::string FieldSpec::descriptor() const {
  return n_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(n_);
}

std::string FieldSpec::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = modulus_.size(); k-- > 0;) {
    const Residue c = modulus_[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'X';
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power_decompose(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1 || p > UINT32_MAX) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), n};
}

std::pair<std::uint32_t, unsigned> parse_field_descriptor(std::string_view text) {
  auto parse_uint = [&](std::string_view part, std::uint64_t& out) {
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, out);
    if (part.empty() || ec != std::errc{} || ptr != end) {
      throw Error(ErrorKind::ParseError, "bad field descriptor '" + std::string(text) + "'");
    }
  };
  std::uint64_t p = 0;
  std::uint64_t n = 1;
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    parse_uint(text, p);
  } else {
    parse_uint(text.substr(0, caret), p);
    parse_uint(text.substr(caret + 1), n);
  }
  if (p > UINT32_MAX || n == 0 || n > 64) {
    throw Error(ErrorKind::ParseError, "field descriptor out of range '" + std::string(text) + "'");
  }
  return {static_cast<std::uint32_t>(p), static_cast<unsigned>(n)};
}

bool is_irreducible(std::uint32_t p, const ResiduePoly& poly) {
  ResiduePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    ResiduePoly divisor(d + 1, 0);
    divisor[d] = 1;
    do {
      if (poly_mod(f, divisor, p).empty()) return false;
    } while (next_coeffs(divisor, d, p));
  }
  return true;
}

std::vector<ResiduePoly> monic_irreducibles(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::vector<ResiduePoly> out;
  ResiduePoly poly(n + 1, 0);
  poly[n] = 1;
  // Lexicographic low-degree-first order means coefficient 0 varies slowest.
  // Enumerate with the counter reversed: digit n-1 fastest.
  ResiduePoly digits(n, 0);
  do {
    for (unsigned i = 0; i < n; ++i) poly[i] = digits[n - 1 - i];
    if (is_irreducible(p, poly)) out.push_back(poly);
  } while (next_coeffs(digits, n, p));
  return out;
}

FieldRef make_field_with_modulus(std::uint32_t p, ResiduePoly modulus, const FieldLimits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  trim(modulus);
  if (modulus.size() < 2) throw Error(ErrorKind::InvalidArgument, "modulus must have degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
  }
  if (modulus.back() != 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic");
  const unsigned n = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > limits.max_order) {
      throw Error(ErrorKind::OrderTooLarge, std::to_string(p) + "^" + std::to_string(n) +
                                                " exceeds the order bound " +
                                                std::to_string(limits.max_order));
    }
  }
  if (!is_irreducible(p, modulus)) throw Error(ErrorKind::NotIrreducible, "modulus is reducible");
  return FieldRef(new FieldSpec(p, std::move(modulus)));
}

FieldRef make_field(std::uint32_t p, unsigned n, const FieldLimits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > limits.max_order) {
      throw Error(ErrorKind::OrderTooLarge, std::to_string(p) + "^" + std::to_string(n) +
                                                " exceeds the order bound " +
                                                std::to_string(limits.max_order));
    }
  }
  ResiduePoly poly(n + 1, 0);
  poly[n] = 1;
  ResiduePoly digits(n, 0);
  do {
    for (unsigned i = 0; i < n; ++i) poly[i] = digits[n - 1 - i];
    if (is_irreducible(p, poly)) return make_field_with_modulus(p, poly, limits);
  } while (next_coeffs(digits, n, p));
  // Irreducible polynomials exist in every degree.
  throw Error(ErrorKind::InternalConsistency, "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// FqElem

FqElem::FqElem(FieldRef field, ResiduePoly coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "null field");
  if (coeffs_.size() != field_->n()) {
    throw Error(ErrorKind::InvalidArgument, "element needs exactly n coefficients");
  }
  for (auto c : coeffs_) {
    if (c >= field_->p()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
  }
}

FqElem FqElem::zero(const FieldRef& field) { return FqElem(field, ResiduePoly(field->n(), 0)); }

FqElem FqElem::one(const FieldRef& field) {
  ResiduePoly c(field->n(), 0);
  c[0] = 1;
  return FqElem(field, std::move(c));
}

FqElem FqElem::from_int(const FieldRef& field, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(field->p());
  ResiduePoly c(field->n(), 0);
  c[0] = static_cast<Residue>(((value % p) + p) % p);
  return FqElem(field, std::move(c));
}

FqElem FqElem::from_index(const FieldRef& field, std::uint64_t index) {
  if (index >= field->order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  ResiduePoly c(field->n(), 0);
  for (std::size_t i = field->n(); i-- > 0;) {
    c[i] = static_cast<Residue>(index % field->p());
    index /= field->p();
  }
  return FqElem(field, std::move(c));
}

std::uint64_t FqElem::index() const noexcept {
  std::uint64_t idx = 0;
  for (auto c : coeffs_) idx = idx * field_->p() + c;
  return idx;
}

bool FqElem::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::string FqElem::to_string() const {
  if (field_->n() == 1) return std::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k];
      continue;
    }
    if (coeffs_[k] != 1) os << coeffs_[k] << '*';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

bool operator==(const FqElem& lhs, const FqElem& rhs) {
  check_same_field(lhs, rhs);
  return lhs.coeffs() == rhs.coeffs();
}

FqElem operator+(const FqElem& lhs, const FqElem& rhs) {
  check_same_field(lhs, rhs);
  const auto p = lhs.field()->p();
  ResiduePoly c(lhs.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (lhs.coeffs()[i] + rhs.coeffs()[i]) % p;
  return FqElem(lhs.field(), std::move(c));
}

FqElem operator-(const FqElem& x) {
  const auto p = x.field()->p();
  ResiduePoly c(x.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - x.coeffs()[i]) % p;
  return FqElem(x.field(), std::move(c));
}

FqElem operator-(const FqElem& lhs, const FqElem& rhs) { return lhs + (-rhs); }

FqElem operator*(const FqElem& lhs, const FqElem& rhs) {
  check_same_field(lhs, rhs);
  const auto& field = *lhs.field();
  const std::uint64_t p = field.p();
  const std::size_t n = field.n();
  ResiduePoly prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      prod[i + j] = static_cast<Residue>((prod[i + j] + std::uint64_t{lhs.coeffs()[i]} * rhs.coeffs()[j]) % p);
    }
  }
  ResiduePoly reduced = poly_mod(std::move(prod), field.modulus(), field.p());
  reduced.resize(n, 0);
  return FqElem(lhs.field(), std::move(reduced));
}

FqElem pow(const FqElem& x, std::uint64_t exponent) {
  FqElem result = FqElem::one(x.field());
  FqElem square = x;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

FqElem inverse(const FqElem& x) {
  if (x.is_zero()) throw Error(ErrorKind::InverseOfZero, "inverse of zero in " + x.field()->descriptor());
  return pow(x, x.field()->order() - 2);
}

std::vector<FqElem> enumerate(const FieldRef& field) {
  std::vector<FqElem> out;
  out.reserve(field->order());
  for (std::uint64_t i = 0; i < field->order(); ++i) out.push_back(FqElem::from_index(field, i));
  return out;
}

// ---------------------------------------------------------------------------
// FieldTables

FieldTables::FieldTables(const FieldRef& field)
    : order(static_cast<std::uint32_t>(field->order())),
      zero(static_cast<std::uint32_t>(FqElem::zero(field).index())),
      one(static_cast<std::uint32_t>(FqElem::one(field).index())),
      minus_one(static_cast<std::uint32_t>((-FqElem::one(field)).index())),
      add_table(std::size_t{order} * order),
      mul_table(std::size_t{order} * order),
      neg_table(order),
      inv_table(order, 0) {
  const auto elems = enumerate(field);
  for (std::uint32_t x = 0; x < order; ++x) {
    neg_table[x] = static_cast<std::uint32_t>((-elems[x]).index());
    if (!elems[x].is_zero()) inv_table[x] = static_cast<std::uint32_t>(inverse(elems[x]).index());
    for (std::uint32_t y = 0; y < order; ++y) {
      add_table[std::size_t{x} * order + y] = static_cast<std::uint32_t>((elems[x] + elems[y]).index());
      mul_table[std::size_t{x} * order + y] = static_cast<std::uint32_t>((elems[x] * elems[y]).index());
    }
  }
}

}  // namespace affrep::ff
