#include "affrep/tqft.hpp"

#include <gtest/gtest.h>

#include "affrep/affcount.hpp"
#include "affrep/error.hpp"
#include "affrep/geomstrat.hpp"
#include "test_support.hpp"

namespace affrep::tqft {
namespace {

using testing::P;

const IntPoly q = IntPoly::variable();
const IntPoly one = IntPoly::constant(1);
const IntPoly group = q * (q - one);

TEST(BuildTransfer, Entries) {
  const auto data = build_transfer();
  EXPECT_EQ(data.group_class, P("q^2 - q"));
  EXPECT_EQ(data.transfer.at(0, 0), pow(q, 3) * pow(q - one, 2));
  EXPECT_EQ(data.transfer.at(0, 0), group * P("q^3 - q^2"));
  EXPECT_EQ(data.transfer.at(0, 1), group * P("q^4 - 3*q^3 + 2*q^2"));
  EXPECT_EQ(data.transfer.at(1, 0), group * P("q^3 - 2*q^2"));
  EXPECT_EQ(data.transfer.at(1, 1), group * P("q^4 - 3*q^3 + 3*q^2"));
  EXPECT_EQ(data.fiber_generic.eval(2), 0);
}

TEST(BuildTransfer, AssemblyAndComplements) {
  const auto data = build_transfer();
  const IntPoly ambient = pow(q - one, 3) * pow(q, 3);
  EXPECT_EQ(data.transfer.at(0, 0), data.fiber_identity);
  EXPECT_EQ(data.transfer.at(1, 0), data.fiber_generic);
  EXPECT_EQ(data.transfer.at(0, 1), data.fiber_identity_twisted);
  EXPECT_EQ(data.transfer.at(1, 1), data.fiber_generic_twisted);
  EXPECT_EQ(data.fiber_identity_twisted, ambient - data.fiber_identity);
  EXPECT_EQ(data.fiber_generic_twisted, ambient - data.fiber_generic);
}

TEST(ApplyTransfer, Generators) {
  const auto data = build_transfer();
  EXPECT_EQ(apply_transfer(unit_state(), data), (KModClass{group * P("q^3 - q^2"), group * P("q^3 - 2*q^2")}));
  EXPECT_EQ(apply_transfer(KModClass{}, data), KModClass{});
  EXPECT_EQ(apply_transfer(KModClass{IntPoly{}, one}, data),
            (KModClass{data.fiber_identity_twisted, data.fiber_generic_twisted}));
}

TEST(CloseSurface, PublishedPolynomials) {
  const auto data = build_transfer();
  EXPECT_EQ(close_surface(1, data), P("q^3 - q^2"));
  EXPECT_EQ(close_surface(2, data), P("q^7 - 4*q^6 + 6*q^5 - 3*q^4"));
  EXPECT_EQ(close_surface(5, data), pow(q, 9) * (pow(q - one, 10) + q - one));
  EXPECT_THROW(close_surface(0, data), Error);
}

TEST(CloseSurface, SquaredTransferCountsGenusTwoOverF3) {
  const auto data = build_transfer();
  const PolyMatrix sq = pow(data.transfer, 2);
  // Top-left of the square is A^2 + BC in the entries of the matrix.
  EXPECT_EQ(sq.at(0, 0), pow(data.transfer.at(0, 0), 2) + data.transfer.at(0, 1) * data.transfer.at(1, 0));
  const IntPoly normalized = exact_div(sq.at(0, 0), pow(group, 2));
  EXPECT_EQ(normalized.eval(3), 486);
  EXPECT_EQ(normalized.eval(3), count::count_semi(ff::make_field(3, 1), 2).count);
}

TEST(CloseSurface, MatchesGeometryUpToGenusTen) {
  const auto data = build_transfer();
  for (unsigned g = 1; g <= 10; ++g) EXPECT_EQ(close_surface(g, data), geom::rep_class(g)) << "g=" << g;
}

TEST(CloseSurface, SemigroupAndProjectionLaws) {
  const auto data = build_transfer();
  KModClass state = unit_state();
  for (unsigned g = 1; g <= 8; ++g) {
    state = apply_transfer(state, data);
    EXPECT_EQ(cap(state), pow(group, g) * close_surface(g, data));
    EXPECT_EQ(close_surface_by_iteration(g, data), close_surface(g, data));
  }
  EXPECT_EQ(cap(KModClass{P("q + 3"), P("q^9")}), P("q + 3"));
}

TEST(Reconstruct, PublishedTriple) {
  const auto r = reconstruct_transfer(geom::rep_class(1), geom::rep_class(2), geom::rep_class(3));
  EXPECT_EQ(r.a, pow(q - one, 2) * pow(q, 3));
  EXPECT_EQ(r.b, pow(q - one, 3) * pow(q - IntPoly::constant(2), 2) * pow(q, 6));
  EXPECT_EQ(r.d, (P("q^2 - 3*q + 3")) * (q - one) * pow(q, 3));
  // Only the product BC matters; the original matrix has BC = V_I * F.
  const auto data = build_transfer();
  EXPECT_EQ(r.b, data.transfer.at(0, 1) * data.transfer.at(1, 0));
}

TEST(Reconstruct, PowersReproduceClosedSurfaces) {
  const auto data = build_transfer();
  const auto r = reconstruct_transfer(close_surface(1, data), close_surface(2, data), close_surface(3, data));
  for (unsigned g = 1; g <= 6; ++g) EXPECT_EQ(close_with_matrix(r.matrix(), g), close_surface(g, data));
}

TEST(Reconstruct, Degenerate) {
  try {
    reconstruct_transfer(IntPoly{}, IntPoly{}, IntPoly{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroB);
  }
  // A triple with B != 0 that no rank-2 matrix explains.
  try {
    reconstruct_transfer(geom::rep_class(1), geom::rep_class(2), geom::rep_class(3) + one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
  }
}

TEST(EigenVerify, AllIdentitiesHold) {
  const auto checks = eigen_verify(build_transfer());
  ASSERT_EQ(checks.size(), 4U);
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.details;
}

TEST(EigenVerify, TraceAndDeterminantAtIntegerPoints) {
  // Oracle: evaluate the bare matrix numerically and compare with
  // x^2 + x^2 (x-1)^2 and x^4 (x-1)^2, independent of IntPoly arithmetic.
  for (long x = -6; x <= 12; ++x) {
    const long m11 = x * x * x - x * x;
    const long m12 = x * x * x * x - 3 * x * x * x + 2 * x * x;
    const long m21 = x * x * x - 2 * x * x;
    const long m22 = x * x * x * x - 3 * x * x * x + 3 * x * x;
    EXPECT_EQ(m11 + m22, x * x + x * x * (x - 1) * (x - 1));
    EXPECT_EQ(m11 * m22 - m12 * m21, x * x * x * x * (x - 1) * (x - 1));
  }
  const auto data = build_transfer();
  const PolyMatrix m = exact_div(data.transfer, data.group_class);
  for (long x = -6; x <= 12; ++x) {
    const Integer trace = (m.at(0, 0) + m.at(1, 1)).eval(x);
    EXPECT_EQ(trace, x * x + x * x * (x - 1) * (x - 1));
  }
}

TEST(EigenVerify, DetectsCorruptedMatrix) {
  auto data = build_transfer();
  data.transfer.at(1, 1) += data.group_class;
  const auto checks = eigen_verify(data);
  EXPECT_FALSE(checks[1].pass);
  EXPECT_FALSE(checks[2].pass);
}

TEST(CloseSurface, EvaluatesToTableCounts) {
  const auto data = build_transfer();
  for (unsigned g = 1; g <= 2; ++g) {
    for (std::uint64_t qq : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
      const auto [p, n] = *ff::prime_power_decompose(qq);
      EXPECT_EQ(close_surface(g, data).eval(Integer(qq)), count::count_semi(ff::make_field(p, n), g).count);
    }
  }
}

}  // namespace
}  // namespace affrep::tqft
