// Torsion-section quotients.
//
// For E: y^2 = x(x^2 + a x + b) the subgroup {O, (0,0)} gives the
// classical degree-2 quotient E': y^2 = x(x^2 - 2a x + (a^2 - 4b)) via
// (x, y) -> (y^2/x^2, y(b - x^2)/x^2).
//
// A point P = (x4, y4) with 2P = (0, 0) satisfies x4^2 = b, and its
// image on E' is the 2-torsion point with x-coordinate
//   phi(x4) = x4 + a + b/x4 = 2*x4 + a.
// Translating that point to the origin and quotienting again yields the
// cyclic degree-4 quotient E/<P>.
#include "ellq/isogeny.hpp"

namespace ellq {

namespace {

void require_split_form(const WeierstrassModel& m, const char* what) {
  if (!m.is_simplified() || !m.a6.is_zero())
    throw input_error(std::string(what) +
                      " requires the form y^2 = x(x^2 + a*x + b)");
}

}  // namespace

WeierstrassModel shift_two_torsion(const WeierstrassModel& m,
                                   const MultiPoly& x0) {
  if (!m.is_simplified())
    throw input_error("translation requires a model with a1 = a3 = 0");
  if (!m.rhs_at(x0).is_zero())
    throw input_error("translation point is not on the curve");
  MultiPoly a2 = m.a2 + 3 * x0;
  MultiPoly a4 = m.a4 + 2 * x0 * m.a2 + 3 * x0 * x0;
  return WeierstrassModel::simplified(m.base_var, a2, a4, MultiPoly());
}

WeierstrassModel two_isogeny(const WeierstrassModel& m) {
  require_split_form(m, "2-isogeny");
  const MultiPoly& a = m.a2;
  const MultiPoly& b = m.a4;
  MultiPoly disc = a * a - 4 * b;
  if (disc.is_zero() || b.is_zero())
    throw math_error("2-isogeny target is singular");
  return WeierstrassModel::simplified(m.base_var, Rat(-2) * a, disc,
                                      MultiPoly());
}

FourIsogenyResult four_torsion_quotient(const WeierstrassModel& m,
                                        const MultiPoly& p4x) {
  require_split_form(m, "4-isogeny");
  if (m.a4 != p4x * p4x)
    throw input_error("point does not double to the origin: b != x^2");
  MultiPoly rhs = m.rhs_at(p4x);
  if (!poly_sqrt(rhs, m.base_var))
    throw input_error("point of order four has no polynomial y-coordinate");

  FourIsogenyResult out;
  out.intermediate = two_isogeny(m);
  MultiPoly image_x = 2 * p4x + m.a2;  // phi(p4), a 2-torsion abscissa
  WeierstrassModel shifted = shift_two_torsion(out.intermediate, image_x);
  out.quotient = two_isogeny(shifted);
  return out;
}

bool j_equivalent(const WeierstrassModel& m1, const WeierstrassModel& m2) {
  auto [num1, den1] = j_invariant_pair(standard_invariants(m1));
  auto [num2, den2] = j_invariant_pair(standard_invariants(m2));
  return num1 * den2 == num2 * den1;
}

}  // namespace ellq
