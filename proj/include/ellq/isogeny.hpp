// Quotients of an elliptic fibration by torsion sections: translation of
// the origin to a 2-torsion point, the 2-isogeny with kernel (0, 0), and
// the composite 4-isogeny cyclic over a section of order four.
#pragma once

#include "ellq/weierstrass.hpp"

namespace ellq {

// Moves the 2-torsion point (x0, 0) to the origin.  Requires a model
// with a1 = a3 = 0 and x0 a root of the right-hand side.
WeierstrassModel shift_two_torsion(const WeierstrassModel& m,
                                   const MultiPoly& x0);

// Quotient of y^2 = x(x^2 + a x + b) by the section (0, 0):
// y^2 = x(x^2 - 2a x + (a^2 - 4b)).  Throws if the target is singular.
WeierstrassModel two_isogeny(const WeierstrassModel& m);

struct FourIsogenyResult {
  WeierstrassModel intermediate;  // quotient by the order-2 subgroup
  WeierstrassModel quotient;      // quotient by the full cyclic group
};

// Quotient of y^2 = x(x^2 + a x + b) by a section of order four whose
// x-coordinate is p4x.  Checks b = p4x^2 (so the point doubles to the
// origin) and that the point has a polynomial y-coordinate.
FourIsogenyResult four_torsion_quotient(const WeierstrassModel& m,
                                        const MultiPoly& p4x);

// True when the two models have equal j-invariants, compared as the
// cross product c4(m1)^3 * Delta(m2) = c4(m2)^3 * Delta(m1).
bool j_equivalent(const WeierstrassModel& m1, const WeierstrassModel& m2);

}  // namespace ellq
