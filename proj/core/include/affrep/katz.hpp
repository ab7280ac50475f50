#pragma once

// Reconstruction of the E-polynomial from point counts over finitely many
// finite fields, by exact interpolation.

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <vector>

#include "affrep/affcount.hpp"
#include "affrep/exactpoly.hpp"

namespace affrep::katz {

struct SamplePoint {
  Integer x;
  Integer y;
};

// The interpolant of degree <= degree_bound through the first
// degree_bound + 1 points, computed over the rationals. It must have integer
// coefficients (else Error(NonIntegerCoefficients)) and pass through every
// remaining point (else Error(ExtraPointMismatch)). Throws
// Error(DuplicateAbscissa) and Error(InvalidArgument) for too few points.
IntPoly lagrange_interpolate(std::span<const SamplePoint> points, std::size_t degree_bound);

// Degree bound for Rep(Sigma_g): the variety sits in Aff(1)^2g of dimension 4g.
std::size_t degree_bound(unsigned genus);

// The k smallest prime powers >= 2.
std::vector<std::uint64_t> smallest_prime_powers(std::size_t k);

class SamplePlan {
 public:
  // Validates: every entry a prime power, pairwise distinct, and at least
  // degree_bound(genus) + 1 entries. Throws Error(InvalidArgument).
  SamplePlan(unsigned genus, std::vector<std::uint64_t> prime_powers);

  // The 4g smallest prime powers.
  static SamplePlan default_for(unsigned genus);

  unsigned genus() const noexcept { return genus_; }
  std::size_t degree_bound() const noexcept { return degree_bound_; }
  const std::vector<std::uint64_t>& prime_powers() const noexcept { return prime_powers_; }

 private:
  unsigned genus_;
  std::size_t degree_bound_;
  std::vector<std::uint64_t> prime_powers_;
};

struct KatzResult {
  unsigned genus = 0;
  IntPoly epoly;
  std::vector<count::CountRecord> counts;
};

// Interpolates counts (q, #Rep(Sigma_g)(F_q)) with the genus degree bound and
// checks the interpolant has exactly that degree.
IntPoly epoly_from_counts(unsigned genus, std::span<const SamplePoint> counts);

// Counts points at every prime power of the plan with the chosen engine,
// then interpolates.
KatzResult katz_epoly(const SamplePlan& plan, count::Engine engine = count::Engine::Semi,
                      const count::CountOptions& options = {});

// Reads "q,count" lines. Blank lines, '#' comments and a leading "q,count"
// header are skipped. Throws Error(ParseError).
std::vector<SamplePoint> read_counts_csv(std::istream& in);

}  // namespace affrep::katz
