#pragma once

// Transfer-matrix evaluation of [Rep(Sigma_g)] for G = Aff(1, K).
//
// The holed-torus bordism L acts on the rank-2 module spanned by i_!1 (the
// unit over the identity) and j_!1 (the unit over the non-identity
// translations). A closed genus-g surface is D, then L applied g times, then
// the cap D-dagger, and the result is normalized by [G]^g with [G] = q(q-1).
//
// All results hold in Z[q]; the normalization divides exactly instead of
// localizing, so they are valid up to annihilators of q and q-1.

#include <string>
#include <vector>

#include "affrep/exactpoly.hpp"

namespace affrep::tqft {

inline constexpr const char* kLocalizationCaveat =
    "Z[q] result of dividing by [G]^g = (q(q-1))^g; holds in K(Var) up to annihilators of q and q-1.";

// Coordinates on the generators (i_!1, j_!1).
struct KModClass {
  IntPoly c_i;
  IntPoly c_j;

  friend bool operator==(const KModClass&, const KModClass&) = default;
};

struct TransferData {
  // Column 1 is the image of i_!1, column 2 the image of j_!1.
  PolyMatrix transfer{2, 2};
  // [Aff(1)] = q(q-1).
  IntPoly group_class;
  // Fibers of (A1, A2, B) -> B [A1, A2] B^-1 over a generic point and over I.
  IntPoly fiber_generic;
  IntPoly fiber_identity;
  // Same for (T, A1, A2, B) -> B T [A1, A2] B^-1 with T a nontrivial translation.
  IntPoly fiber_generic_twisted;
  IntPoly fiber_identity_twisted;
};

// Assembles the fiber classes from their stratifications, forms the matrix,
// and checks it against the closed forms. Throws Error(InternalConsistency).
TransferData build_transfer();

KModClass unit_state();
KModClass apply_transfer(const KModClass& state, const TransferData& data);
// The cap reads the i_!1 coordinate.
IntPoly cap(const KModClass& state);

// Top-left entry of transfer^g divided by (q(q-1))^g. Throws
// Error(GenusOutOfRange) for g == 0, Error(NotDivisible) on inconsistency.
IntPoly close_surface(unsigned genus, const TransferData& data);
// Same value obtained by iterating apply_transfer from unit_state() and capping.
IntPoly close_surface_by_iteration(unsigned genus, const TransferData& data);
// Normalized top-left entry of m^g for an arbitrary 2x2 transfer matrix.
IntPoly close_with_matrix(const PolyMatrix& m, unsigned genus);

// [[a, b], [1, d]]: the transfer matrix up to a change of basis preserving
// top-left entries of all powers.
struct ReducedTransfer {
  IntPoly a;
  IntPoly b;
  IntPoly d;

  PolyMatrix matrix() const;
};

// Solves for a, b, d from the genus 1, 2, 3 classes. Throws Error(ZeroB) when
// b vanishes and Error(NotDivisible) when the triple is inconsistent with a
// rank-2 transfer matrix.
ReducedTransfer reconstruct_transfer(const IntPoly& e1, const IntPoly& e2, const IntPoly& e3);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

// Exact checks of the diagonalization of transfer / q(q-1): both eigenvector
// identities, trace and determinant.
std::vector<IdentityCheck> eigen_verify(const TransferData& data);

}  // namespace affrep::tqft
