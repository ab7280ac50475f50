#include "affrep/geomstrat.hpp"

#include <string>

#include "affrep/error.hpp"

namespace affrep::geom {

namespace {

const IntPoly kQ = IntPoly::variable();
const IntPoly kOne = IntPoly::constant(1);

void check_s(unsigned s) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "X_s needs s >= 1");
}

void check_genus(unsigned genus) {
  if (genus == 0) throw Error(ErrorKind::GenusOutOfRange, "genus must be at least 1");
}

}  // namespace

IntPoly xs_recursive(unsigned s) {
  check_s(s);
  // X_1 = {alpha != 0, -1; beta = 0} + {alpha = 0; beta free}.
  IntPoly xs = (kQ - IntPoly::constant(2)) + kQ;
  for (unsigned k = 2; k <= s; ++k) {
    // alpha_k != 0 fixes beta_k; alpha_k = 0 leaves X_(k-1) x K.
    IntPoly generic = (kQ - IntPoly::constant(2)) * pow(kQ, k - 1) * pow(kQ - kOne, k - 1);
    xs = generic + kQ * xs;
  }
  return xs;
}

IntPoly xs_closed(unsigned s) {
  check_s(s);
  return pow(kQ, s - 1) * pow(kQ - kOne, s) + pow(kQ, s) - pow(kQ, s - 1);
}

IntPoly rep_class(unsigned genus) {
  check_genus(genus);
  return xs_closed(2 * genus);
}

IntPoly moduli_class(unsigned genus) {
  check_genus(genus);
  const IntPoly torus = kQ - kOne;  // K minus the origin
  return pow(torus, 2 * genus);
}

IntPoly character_class(unsigned genus) {
  check_genus(genus);
  const IntPoly punctured_line = kQ - IntPoly::constant(1);  // K minus {1}
  return pow(punctured_line, 2 * genus);
}

}  // namespace affrep::geom
