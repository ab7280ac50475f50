#include "affrep/katz.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "affrep/error.hpp"
#include "affrep/geomstrat.hpp"
#include "test_support.hpp"

namespace affrep::katz {
namespace {

using testing::P;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no affrep::Error thrown";
  return ErrorKind::InvalidArgument;
}

std::vector<SamplePoint> samples_of(const IntPoly& p, std::initializer_list<long> xs) {
  std::vector<SamplePoint> out;
  for (long x : xs) out.push_back({Integer(x), p.eval(x)});
  return out;
}

TEST(Lagrange, GenusOneTableRow) {
  const std::vector<SamplePoint> pts{{2, 4}, {3, 18}, {4, 48}, {5, 100}};
  EXPECT_EQ(lagrange_interpolate(pts, 3), P("q^3 - q^2"));
}

TEST(Lagrange, Constant) {
  const std::vector<SamplePoint> pts{{2, 7}, {3, 7}};
  EXPECT_EQ(lagrange_interpolate(pts, 1), IntPoly::constant(7));
}

TEST(Lagrange, SampledPolynomial) {
  const IntPoly target = P("q^5 - 3*q");
  EXPECT_EQ(lagrange_interpolate(samples_of(target, {1, 2, 3, 4, 5, 6}), 5), target);
}

TEST(Lagrange, Errors) {
  const std::vector<SamplePoint> dup{{2, 4}, {2, 4}, {3, 18}};
  EXPECT_EQ(kind_of([&] { lagrange_interpolate(dup, 2); }), ErrorKind::DuplicateAbscissa);
  // Through (0, 0) and (2, 1): q / 2.
  const std::vector<SamplePoint> half{{0, 0}, {2, 1}};
  EXPECT_EQ(kind_of([&] { lagrange_interpolate(half, 1); }), ErrorKind::NonIntegerCoefficients);
  // Cubic data forced through a line.
  EXPECT_EQ(kind_of([&] { lagrange_interpolate(samples_of(P("q^3"), {0, 1, 2}), 1); }),
            ErrorKind::ExtraPointMismatch);
  const std::vector<SamplePoint> few{{1, 1}};
  EXPECT_EQ(kind_of([&] { lagrange_interpolate(few, 3); }), ErrorKind::InvalidArgument);
}

TEST(LagrangeProperty, RoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> xs(-40, 40);
  for (int i = 0; i < 100; ++i) {
    const IntPoly p = testing::random_poly(rng, 9, 50);
    const std::size_t d = p.degree().value_or(0) + (i % 3);
    std::vector<SamplePoint> pts;
    std::set<long> used;
    while (pts.size() < d + 1) {
      const long x = xs(rng);
      if (used.insert(x).second) pts.push_back({Integer(x), p.eval(x)});
    }
    EXPECT_EQ(lagrange_interpolate(pts, d), p);
  }
}

TEST(LagrangeProperty, ExtraPointsDoNotChangeResult) {
  const IntPoly e2 = P("q^7 - 4*q^6 + 6*q^5 - 3*q^4");
  const auto base = samples_of(e2, {2, 3, 4, 5, 7, 8, 9, 11});
  const auto extended = samples_of(e2, {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23});
  EXPECT_EQ(lagrange_interpolate(base, 7), lagrange_interpolate(extended, 7));
}

TEST(SamplePlan, Validation) {
  EXPECT_EQ(degree_bound(3), 11U);
  EXPECT_EQ(smallest_prime_powers(12),
            (std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19}));
  EXPECT_EQ(SamplePlan::default_for(2).prime_powers(), (std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11}));
  EXPECT_EQ(kind_of([] { SamplePlan(1, {2, 3, 4}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { SamplePlan(1, {2, 3, 4, 6}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { SamplePlan(1, {2, 3, 3, 5}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { SamplePlan(0, {2, 3, 4, 5}); }), ErrorKind::GenusOutOfRange);
  EXPECT_NO_THROW(SamplePlan(1, {5, 3, 2, 7, 4}));
}

TEST(KatzEpoly, GenusOne) {
  const auto res = katz_epoly(SamplePlan(1, {2, 3, 4, 5}));
  EXPECT_EQ(res.epoly, P("q^3 - q^2"));
  ASSERT_EQ(res.counts.size(), 4U);
  EXPECT_EQ(res.counts[3].count, 100);
}

TEST(KatzEpoly, GenusTwo) {
  const auto res = katz_epoly(SamplePlan(2, {2, 3, 4, 5, 7, 8, 9, 11}));
  EXPECT_EQ(res.epoly, P("q^7 - 4*q^6 + 6*q^5 - 3*q^4"));
}

TEST(KatzEpoly, GenusThreeMatchesGeometry) {
  const auto res = katz_epoly(SamplePlan::default_for(3));
  EXPECT_EQ(res.epoly, P("q^11 - 6*q^10 + 15*q^9 - 20*q^8 + 15*q^7 - 5*q^6"));
  EXPECT_EQ(res.epoly, geom::rep_class(3));
}

TEST(KatzEpoly, NaiveEngineAndOverdeterminedPlan) {
  const auto naive = katz_epoly(SamplePlan(1, {2, 3, 4, 5}), count::Engine::Naive);
  EXPECT_EQ(naive.epoly, P("q^3 - q^2"));
  const auto wide = katz_epoly(SamplePlan(1, {2, 3, 4, 5, 7, 8, 9}));
  EXPECT_EQ(wide.epoly, naive.epoly);
}

TEST(KatzEpoly, CorruptedCountIsDetected) {
  auto pts = samples_of(geom::rep_class(1), {2, 3, 4, 5, 7});
  pts[4].y += 1;
  EXPECT_EQ(kind_of([&] { epoly_from_counts(1, pts); }), ErrorKind::ExtraPointMismatch);
  pts = samples_of(geom::rep_class(1), {2, 3, 4, 5});
  pts[1].y += 1;
  EXPECT_EQ(kind_of([&] { epoly_from_counts(1, pts); }), ErrorKind::NonIntegerCoefficients);
}

TEST(CountsCsv, Parse) {
  std::istringstream in("q,count\n2,4\n# comment\n\n3, 18\r\n4,48\n5,100\n");
  const auto pts = read_counts_csv(in);
  ASSERT_EQ(pts.size(), 4U);
  EXPECT_EQ(pts[1].x, 3);
  EXPECT_EQ(pts[1].y, 18);
  EXPECT_EQ(epoly_from_counts(1, pts), P("q^3 - q^2"));

  std::istringstream headerless("19,84217678403958\n");
  EXPECT_EQ(read_counts_csv(headerless).front().y, Integer("84217678403958"));

  std::istringstream bad("2;4\n");
  EXPECT_EQ(kind_of([&] { read_counts_csv(bad); }), ErrorKind::ParseError);
  std::istringstream bad_int("2,4x\n");
  EXPECT_EQ(kind_of([&] { read_counts_csv(bad_int); }), ErrorKind::ParseError);
}

}  // namespace
}  // namespace affrep::katz
