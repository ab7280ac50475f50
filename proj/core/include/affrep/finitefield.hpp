#pragma once

// Finite fields F_{p^n} = F_p[X]/(m(X)) with m monic irreducible of degree n.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affrep::ff {

using Residue = std::uint32_t;
// Coefficients low degree first.
using ResiduePoly = std::vector<Residue>;

struct FieldLimits {
  // Largest field order make_field will build.
  std::uint64_t max_order = 1024;
};

class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  // Monic, n + 1 residues, low degree first.
  const ResiduePoly& modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return order_; }

  // "p^n", or "p" for prime fields.
  std::string descriptor() const;
  // Modulus in canonical polynomial text form, variable X.
  std::string modulus_string() const;

  friend bool operator==(const FieldSpec& lhs, const FieldSpec& rhs) {
    return lhs.p_ == rhs.p_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  friend std::shared_ptr<const FieldSpec> make_field_with_modulus(std::uint32_t, ResiduePoly,
                                                                  const FieldLimits&);
  FieldSpec(std::uint32_t p, ResiduePoly modulus);

  std::uint32_t p_;
  unsigned n_;
  ResiduePoly modulus_;
  std::uint64_t order_;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

bool is_prime(std::uint64_t value) noexcept;

// (p, n) with q = p^n, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power_decompose(std::uint64_t q) noexcept;

// Parses "p^n" (or a bare prime "p"). Throws Error(ParseError).
std::pair<std::uint32_t, unsigned> parse_field_descriptor(std::string_view text);

// Irreducibility by trial division against every monic polynomial of degree
// at most deg/2.
bool is_irreducible(std::uint32_t p, const ResiduePoly& poly);

// All monic irreducible polynomials of degree n over F_p, ordered
// lexicographically on their coefficient vectors read low degree first.
std::vector<ResiduePoly> monic_irreducibles(std::uint32_t p, unsigned n);

// The field with the lexicographically smallest monic irreducible modulus.
// Throws Error(NotPrime), Error(OrderTooLarge), Error(InvalidArgument) for n == 0.
FieldRef make_field(std::uint32_t p, unsigned n, const FieldLimits& limits = {});

// Throws Error(NotIrreducible) in addition to make_field's errors.
FieldRef make_field_with_modulus(std::uint32_t p, ResiduePoly modulus,
                                 const FieldLimits& limits = {});

class FqElem {
 public:
  FqElem(FieldRef field, ResiduePoly coeffs);

  static FqElem zero(const FieldRef& field);
  static FqElem one(const FieldRef& field);
  static FqElem from_int(const FieldRef& field, std::int64_t value);
  // Inverse of index(): digits of the base-p expansion, coefficient 0 most
  // significant, so increasing indices enumerate coefficient vectors in
  // lexicographic order.
  static FqElem from_index(const FieldRef& field, std::uint64_t index);

  const FieldRef& field() const noexcept { return field_; }
  const ResiduePoly& coeffs() const noexcept { return coeffs_; }
  std::uint64_t index() const noexcept;
  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const FqElem& lhs, const FqElem& rhs);

 private:
  FieldRef field_;
  ResiduePoly coeffs_;
};

// Binary operations throw Error(FieldMismatch) across distinct fields.
FqElem operator+(const FqElem& lhs, const FqElem& rhs);
FqElem operator-(const FqElem& lhs, const FqElem& rhs);
FqElem operator*(const FqElem& lhs, const FqElem& rhs);
FqElem operator-(const FqElem& x);
// Throws Error(InverseOfZero).
FqElem inverse(const FqElem& x);
FqElem pow(const FqElem& x, std::uint64_t exponent);

// Every element exactly once, by increasing index().
std::vector<FqElem> enumerate(const FieldRef& field);

// Dense operation tables over element indices, derived from FqElem
// arithmetic. The counting engines run on these.
struct FieldTables {
  explicit FieldTables(const FieldRef& field);

  std::uint32_t order;
  std::uint32_t zero;
  std::uint32_t one;
  std::uint32_t minus_one;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::vector<std::uint32_t> neg_table;
  // inv_table[zero] is unused and set to zero.
  std::vector<std::uint32_t> inv_table;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept { return add_table[x * order + y]; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept { return mul_table[x * order + y]; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept { return add(x, neg_table[y]); }
};

}  // namespace affrep::ff
