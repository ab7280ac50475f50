#include "affrep/katz.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "affrep/error.hpp"
#include "affrep/finitefield.hpp"

namespace affrep::katz {

IntPoly lagrange_interpolate(std::span<const SamplePoint> points, std::size_t degree_bound) {
  const std::size_t basis_size = degree_bound + 1;
  if (points.size() < basis_size) {
    throw Error(ErrorKind::InvalidArgument, "need " + std::to_string(basis_size) + " points, got " +
                                                std::to_string(points.size()));
  }
  {
    std::set<Integer> seen;
    for (const auto& pt : points) {
      if (!seen.insert(pt.x).second) {
        throw Error(ErrorKind::DuplicateAbscissa, "x = " + pt.x.get_str() + " appears twice");
      }
    }
  }

  RatPoly sum;
  for (std::size_t j = 0; j < basis_size; ++j) {
    RatPoly basis(std::vector<Rational>{Rational(1)});
    Rational denom = 1;
    for (std::size_t m = 0; m < basis_size; ++m) {
      if (m == j) continue;
      basis = basis * RatPoly(std::vector<Rational>{Rational(-points[m].x), Rational(1)});
      denom *= Rational(points[j].x - points[m].x);
    }
    sum += basis * (Rational(points[j].y) / denom);
  }

  auto integral = sum.to_int_poly();
  if (!integral) {
    throw Error(ErrorKind::NonIntegerCoefficients,
                "interpolant through " + std::to_string(basis_size) + " points has non-integer coefficients");
  }
  for (std::size_t k = basis_size; k < points.size(); ++k) {
    const Integer at = integral->eval(points[k].x);
    if (at != points[k].y) {
      throw Error(ErrorKind::ExtraPointMismatch, "interpolant gives " + at.get_str() + " at x = " +
                                                     points[k].x.get_str() + ", data says " +
                                                     points[k].y.get_str());
    }
  }
  return *integral;
}

std::size_t degree_bound(unsigned genus) {
  if (genus == 0) throw Error(ErrorKind::GenusOutOfRange, "genus must be at least 1");
  return 4 * std::size_t{genus} - 1;
}

std::vector<std::uint64_t> smallest_prime_powers(std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; out.size() < k; ++q) {
    if (ff::prime_power_decompose(q)) out.push_back(q);
  }
  return out;
}

SamplePlan::SamplePlan(unsigned genus, std::vector<std::uint64_t> prime_powers)
    : genus_(genus), degree_bound_(katz::degree_bound(genus)), prime_powers_(std::move(prime_powers)) {
  std::set<std::uint64_t> seen;
  for (auto q : prime_powers_) {
    if (!ff::prime_power_decompose(q)) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
    }
    if (!seen.insert(q).second) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " repeated in plan");
  }
  if (prime_powers_.size() < degree_bound_ + 1) {
    throw Error(ErrorKind::InvalidArgument, "genus " + std::to_string(genus) + " needs at least " +
                                                std::to_string(degree_bound_ + 1) + " prime powers");
  }
}

SamplePlan SamplePlan::default_for(unsigned genus) {
  return SamplePlan(genus, smallest_prime_powers(katz::degree_bound(genus) + 1));
}

IntPoly epoly_from_counts(unsigned genus, std::span<const SamplePoint> counts) {
  const std::size_t bound = degree_bound(genus);
  IntPoly epoly = lagrange_interpolate(counts, bound);
  if (epoly.degree() != bound) {
    throw Error(ErrorKind::InternalConsistency,
                "interpolant " + epoly.to_string() + " does not have degree " + std::to_string(bound));
  }
  return epoly;
}

KatzResult katz_epoly(const SamplePlan& plan, count::Engine engine, const count::CountOptions& options) {
  KatzResult result;
  result.genus = plan.genus();
  std::vector<SamplePoint> points;
  for (auto q : plan.prime_powers()) {
    const auto [p, n] = *ff::prime_power_decompose(q);
    ff::FieldLimits limits;
    limits.max_order = std::max<std::uint64_t>(limits.max_order, q);
    const auto field = ff::make_field(p, n, limits);
    auto rec = count::run_engine(engine, field, plan.genus(), options);
    points.push_back({Integer(std::to_string(q)), rec.count});
    result.counts.push_back(std::move(rec));
  }
  result.epoly = epoly_from_counts(plan.genus(), points);
  return result;
}

std::vector<SamplePoint> read_counts_csv(std::istream& in) {
  std::vector<SamplePoint> out;
  std::string line;
  std::size_t lineno = 0;
  auto strip = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'q,count'");
    }
    const std::string qs = strip(line.substr(0, comma));
    const std::string cs = strip(line.substr(comma + 1));
    if (out.empty() && qs == "q" && cs == "count") continue;
    SamplePoint pt;
    if (pt.x.set_str(qs, 10) != 0 || pt.y.set_str(cs, 10) != 0) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad integer in '" + line + "'");
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace affrep::katz
