#pragma once

// Virtual classes from the stratification of X_s = { (alpha, beta) in
// (K - {-1})^s x K^s : sum alpha_i beta_i = 0 }, with Rep(Sigma_g) = X_2g.

#include "affrep/exactpoly.hpp"

namespace affrep::geom {

// [X_s] = (q-2) q^(s-1) (q-1)^(s-1) + q [X_(s-1)], [X_1] = 2q - 2.
// Throws Error(InvalidArgument) for s == 0.
IntPoly xs_recursive(unsigned s);

// [X_s] = q^(s-1) (q-1)^s + q^s - q^(s-1).
IntPoly xs_closed(unsigned s);

// [Rep(Sigma_g)] = q^(2g-1) ((q-1)^2g + q - 1). Throws Error(GenusOutOfRange)
// for g == 0.
IntPoly rep_class(unsigned genus);

// Every representation is S-equivalent to a diagonal one, so the moduli
// space is the torus (K^*)^2g.
IntPoly moduli_class(unsigned genus);

// The character variety is (K - {1})^2g.
IntPoly character_class(unsigned genus);

}  // namespace affrep::geom
