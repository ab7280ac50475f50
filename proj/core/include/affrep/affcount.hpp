#pragma once

// The affine group Aff(1, F_q) = { x -> a*x + b : a != 0 } and engines that
// count homomorphisms from the genus-g surface group into it, i.e. tuples
// (A_1, ..., A_2g) with [A_1, A_2] * ... * [A_2g-1, A_2g] = 1.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "affrep/exactpoly.hpp"
#include "affrep/finitefield.hpp"

namespace affrep::count {

// The matrix [[a, b], [0, 1]].
class AffElem {
 public:
  // Throws Error(InvalidArgument) if a == 0, Error(FieldMismatch) if a and b
  // live in different fields.
  AffElem(ff::FqElem a, ff::FqElem b);

  static AffElem identity(const ff::FieldRef& field);

  const ff::FqElem& a() const noexcept { return a_; }
  const ff::FqElem& b() const noexcept { return b_; }

  friend bool operator==(const AffElem& lhs, const AffElem& rhs) = default;

 private:
  ff::FqElem a_;
  ff::FqElem b_;
};

AffElem operator*(const AffElem& x, const AffElem& y);
AffElem inverse(const AffElem& x);
// x * y * x^-1 * y^-1.
AffElem commutator(const AffElem& x, const AffElem& y);

// All q(q-1) elements, a-major then b, by field element index.
std::vector<AffElem> enumerate_group(const ff::FieldRef& field);

enum class Engine { Naive, Semi, Closed, Generic };

std::string_view to_string(Engine engine) noexcept;
// Throws Error(ParseError).
Engine parse_engine(std::string_view text);

struct CountRecord {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned genus = 0;
  Integer count;
  Engine engine = Engine::Semi;
  std::chrono::duration<double, std::milli> elapsed{};
};

struct CountOptions {
  // Upper bound on enumerated tuples (naive, generic) or alpha vectors (semi).
  std::uint64_t guard = 100'000'000;
  unsigned threads = 1;
  // Semi engine only: re-derive every kernel size by enumerating beta
  // directly. Honored for q <= 5.
  bool verify_kernel = false;
};

// Exhaustive enumeration of Aff(1, F_q)^2g on raw group elements.
// Throws Error(BudgetExceeded) when (q(q-1))^2g > guard.
CountRecord count_naive(const ff::FieldRef& field, unsigned genus, const CountOptions& options = {});

// Counts the isomorphic variety of pairs (alpha, beta) with alpha_i != -1 and
// sum alpha_i beta_i = 0, iterating over alpha and adding the size of the
// kernel of beta -> <alpha, beta>. Throws Error(BudgetExceeded) when
// (q-1)^2g > guard.
CountRecord count_semi(const ff::FieldRef& field, unsigned genus, const CountOptions& options = {});

// q^(2g-1) (q-1)^2g + q^2g - q^(2g-1).
Integer count_closed(const Integer& q, unsigned genus);
CountRecord count_closed(const ff::FieldRef& field, unsigned genus);

// Dispatches to one of the Aff(1, F_q) engines; Generic runs
// count_group_generic on aff_group_table(field).
CountRecord run_engine(Engine engine, const ff::FieldRef& field, unsigned genus,
                       const CountOptions& options = {});

// A finite group given only by its multiplication table.
struct GroupTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  // product(x, y) = mul[x * order + y]
  std::vector<std::uint32_t> mul;

  std::uint32_t product(std::size_t x, std::size_t y) const noexcept { return mul[x * order + y]; }
};

// Throws Error(InvalidGroupTable) unless the table has an identity, closed
// entries, two-sided inverses and associativity on sampled triples (all
// triples when order <= 32).
void validate_group_table(const GroupTable& table);

GroupTable aff_group_table(const ff::FieldRef& field);
GroupTable cyclic_group_table(std::size_t order);

// Brute-force count of 2g-tuples with trivial commutator product, using only
// the table. Throws Error(BudgetExceeded) when order^2g > guard.
Integer count_group_generic(const GroupTable& table, unsigned genus, const CountOptions& options = {});

}  // namespace affrep::count
