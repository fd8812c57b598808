#pragma once
// Weierstrass models of elliptic curves over the rational function field
// Q(t) and their standard quantities:
//
//   y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
//   b2 = a1^2 + 4*a2          b4 = 2*a4 + a1*a3
//   b6 = a3^2 + 4*a6          b8 = a1^2*a6 + 4*a2*a6 - a1*a3*a4
//                                  + a2*a3^2 - a4^2
//   c4 = b2^2 - 24*b4         c6 = -b2^3 + 36*b2*b4 - 216*b6
//   Delta = -b2^2*b8 - 8*b4^3 - 27*b6^2 + 9*b2*b4*b6
//   1728*Delta = c4^3 - c6^2,  4*b8 = b2*b6 - b4^2,  j = c4^3 / Delta
//
// The coefficients a_i are polynomials in the base variable; x and y never
// appear in them.

#include <string>
#include <utility>

#include "ellq/poly.hpp"
#include "ellq/univariate.hpp"

namespace ellq {

struct WeierstrassModel {
  std::string base_var;
  MultiPoly a1, a2, a3, a4, a6;

  // y^2 = x^3 + a2*x^2 + a4*x + a6.
  static WeierstrassModel simplified(const std::string& base_var,
                                     const MultiPoly& a2, const MultiPoly& a4,
                                     const MultiPoly& a6);
  bool is_simplified() const { return a1.is_zero() && a3.is_zero(); }
  // Right-hand side cubic evaluated at the polynomial x0.
  MultiPoly rhs_at(const MultiPoly& x0) const;
  // Display form "y^2 + ... = x^3 + ...".
  std::string equation_string() const;
};

struct StandardInvariants {
  MultiPoly b2, b4, b6, b8, c4, c6, delta;
};

// Computes the quantities above; throws math_error when Delta == 0
// (degenerate model) or when a coefficient involves x or y.
StandardInvariants standard_invariants(const WeierstrassModel& m);

// j as the exact unreduced fraction (c4^3, Delta).
std::pair<MultiPoly, MultiPoly> j_invariant_pair(const StandardInvariants& inv);

// True iff j(t) is a constant function, decided exactly: c4^3 and Delta are
// proportional as polynomials.
bool j_is_constant(const WeierstrassModel& m);

struct MinimalizeResult {
  WeierstrassModel model;
  int rescales = 0;      // substitutions (x,y) -> (g^2*x, g^3*y), a_i -> a_i/g^i
  bool depressed = false;  // converted to short form to make a rescale legal
};

// Minimal model at a finite place: repeatedly divides out twelfths of the
// discriminant while v(c4) >= 4, v(c6) >= 6 and v(Delta) >= 12.  If a
// coefficient blocks the rescale the model is first replaced by the short
// form y^2 = x^3 - (c4/48)*x - (c6/864), which has the same c4, c6, Delta.
MinimalizeResult minimalize_at(const WeierstrassModel& m, const Place& place);

struct FlipResult {
  WeierstrassModel model;  // coefficients in the coordinate s = 1/t
  int weight = 0;          // minimal d with deg(a_i) <= i*d for all i
};

// Model near infinity: substitutes t = 1/s and rescales (x,y) by (s^{2d},
// s^{3d}) so all coefficients stay polynomial: a_i(s) = s^{i*d} a_i(1/s).
// The base variable keeps its name.
FlipResult flip_model(const WeierstrassModel& m);

// Extracts a model from an equation lhs == rhs in the variables x, y and one
// base variable; accepts either orientation of the equation and rejects
// anything that is not a Weierstrass cubic.  Throws input_error.
WeierstrassModel model_from_equation(const MultiPoly& lhs, const MultiPoly& rhs,
                                     const std::string& x, const std::string& y,
                                     const std::string& base_var);

}  // namespace ellq
