#include "affrep/tqft.hpp"

#include "affrep/error.hpp"

namespace affrep::tqft {

namespace {

IntPoly q() { return IntPoly::variable(); }
IntPoly c(long v) { return IntPoly::constant(v); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InternalConsistency, what);
}

}  // namespace

TransferData build_transfer() {
  TransferData data;
  const IntPoly units = q() - c(1);                 // K^*
  const IntPoly line_minus_two = q() - c(2);        // K - {0, 1}
  const IntPoly ambient = pow(units, 3) * pow(q(), 3);  // (K^*)^3 x K^3
  data.group_class = q() * units;

  // Generic fiber: b2 solved when a1 != 1, b1 solved when a1 = 1.
  data.fiber_generic = line_minus_two * pow(units, 2) * pow(q(), 2) + line_minus_two * units * pow(q(), 2);
  // Over I: b2 solved when a1 != 1; a1 = a2 = 1; a1 = 1, a2 != 1, b1 = 0.
  data.fiber_identity = line_minus_two * pow(units, 2) * pow(q(), 2) + units * pow(q(), 3) +
                        line_minus_two * units * pow(q(), 2);
  // With a nontrivial translation inserted the fibers are complements.
  data.fiber_identity_twisted = ambient - data.fiber_identity;
  data.fiber_generic_twisted = ambient - data.fiber_generic;

  const IntPoly& g = data.group_class;
  expect(data.fiber_generic == g * IntPoly::parse("q^3 - 2*q^2"), "generic fiber class");
  expect(data.fiber_identity == g * IntPoly::parse("q^3 - q^2"), "identity fiber class");
  expect(data.fiber_identity_twisted == g * IntPoly::parse("q^4 - 3*q^3 + 2*q^2"), "twisted identity fiber class");
  expect(data.fiber_generic_twisted == g * IntPoly::parse("q^4 - 3*q^3 + 3*q^2"), "twisted generic fiber class");

  data.transfer = PolyMatrix(2, 2, {data.fiber_identity, data.fiber_identity_twisted, data.fiber_generic,
                                    data.fiber_generic_twisted});
  expect(data.transfer.at(0, 0) + data.transfer.at(0, 1) == ambient &&
             data.transfer.at(1, 0) + data.transfer.at(1, 1) == ambient,
         "complement identities");
  return data;
}

KModClass unit_state() { return {c(1), IntPoly{}}; }

KModClass apply_transfer(const KModClass& state, const TransferData& data) {
  const auto& m = data.transfer;
  return {m.at(0, 0) * state.c_i + m.at(0, 1) * state.c_j, m.at(1, 0) * state.c_i + m.at(1, 1) * state.c_j};
}

IntPoly cap(const KModClass& state) { return state.c_i; }

IntPoly close_with_matrix(const PolyMatrix& m, unsigned genus) {
  if (genus == 0) throw Error(ErrorKind::GenusOutOfRange, "genus must be at least 1");
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "transfer matrix must be 2x2");
  const PolyMatrix power = pow(m, genus);
  return exact_div(power.at(0, 0), pow(q() * (q() - c(1)), genus));
}

IntPoly close_surface(unsigned genus, const TransferData& data) { return close_with_matrix(data.transfer, genus); }

IntPoly close_surface_by_iteration(unsigned genus, const TransferData& data) {
  if (genus == 0) throw Error(ErrorKind::GenusOutOfRange, "genus must be at least 1");
  KModClass state = unit_state();
  for (unsigned k = 0; k < genus; ++k) state = apply_transfer(state, data);
  return exact_div(cap(state), pow(data.group_class, genus));
}

PolyMatrix ReducedTransfer::matrix() const { return PolyMatrix(2, 2, {a, b, c(1), d}); }

ReducedTransfer reconstruct_transfer(const IntPoly& e1, const IntPoly& e2, const IntPoly& e3) {
  const IntPoly g = q() * (q() - c(1));
  ReducedTransfer r;
  // top-left of M, M^2, M^3 with C = 1: A, A^2 + B, A^3 + 2AB + BD.
  r.a = g * e1;
  r.b = pow(g, 2) * e2 - pow(r.a, 2);
  if (r.b.is_zero()) throw Error(ErrorKind::ZeroB, "B vanishes; D is undetermined");
  r.d = exact_div(pow(g, 3) * e3 - pow(r.a, 3), r.b) - c(2) * r.a;
  return r;
}

std::vector<IdentityCheck> eigen_verify(const TransferData& data) {
  std::vector<IdentityCheck> checks;
  const PolyMatrix m = exact_div(data.transfer, data.group_class);
  const IntPoly q1 = q() - c(1);
  const IntPoly small = pow(q(), 2);              // eigenvalue q^2
  const IntPoly large = pow(q(), 2) * pow(q1, 2);  // eigenvalue q^2 (q-1)^2

  auto eigen = [&](const char* name, const IntPoly& x, const IntPoly& y, const IntPoly& lambda) {
    const PolyMatrix v(2, 1, {x, y});
    const PolyMatrix mv = m * v;
    const PolyMatrix expected = lambda * v;
    checks.push_back({name, mv == expected,
                      "M v = (" + mv.at(0, 0).to_string() + ", " + mv.at(1, 0).to_string() + "), lambda v = (" +
                          expected.at(0, 0).to_string() + ", " + expected.at(1, 0).to_string() + ")"});
  };
  eigen("eigenvector (q-1, -1) with eigenvalue q^2", q1, c(-1), small);
  eigen("eigenvector (1, 1) with eigenvalue q^2 (q-1)^2", c(1), c(1), large);

  const IntPoly trace = m.at(0, 0) + m.at(1, 1);
  const IntPoly det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  const IntPoly trace_expected = small + large;
  const IntPoly det_expected = small * large;
  checks.push_back({"trace = q^2 + q^2 (q-1)^2", trace == trace_expected,
                    trace.to_string() + " vs " + trace_expected.to_string()});
  checks.push_back({"det = q^4 (q-1)^2", det == det_expected, det.to_string() + " vs " + det_expected.to_string()});
  return checks;
}

}  // namespace affrep::tqft
