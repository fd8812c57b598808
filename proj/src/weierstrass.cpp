#include "ellq/weierstrass.hpp"

namespace ellq {

WeierstrassModel WeierstrassModel::simplified(const std::string& base_var,
                                              const MultiPoly& a2,
                                              const MultiPoly& a4,
                                              const MultiPoly& a6) {
  WeierstrassModel m;
  m.base_var = base_var;
  m.a1 = MultiPoly();
  m.a3 = MultiPoly();
  m.a2 = a2;
  m.a4 = a4;
  m.a6 = a6;
  return m;
}

MultiPoly WeierstrassModel::rhs_at(const MultiPoly& x0) const {
  return x0.pow(3) + a2 * x0.pow(2) + a4 * x0 + a6;
}

std::string WeierstrassModel::equation_string() const {
  VarList xy = {"x", "y", base_var};
  MultiPoly x = MultiPoly::variable("x", xy);
  MultiPoly y = MultiPoly::variable("y", xy);
  MultiPoly lhs = y * y + a1 * x * y + a3 * y;
  MultiPoly rhs = x.pow(3) + a2 * x * x + a4 * x + a6;
  return lhs.to_string() + " = " + rhs.to_string();
}

StandardInvariants standard_invariants(const WeierstrassModel& m) {
  for (const MultiPoly* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
    require_univariate(*a, m.base_var);
  StandardInvariants v;
  const MultiPoly &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -(v.b2.pow(3)) + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.delta = -(v.b2 * v.b2 * v.b8) - 8 * v.b4.pow(3) - 27 * v.b6 * v.b6 +
            9 * v.b2 * v.b4 * v.b6;
  if (v.delta.is_zero())
    throw math_error("degenerate Weierstrass model: Delta == 0");
  return v;
}

std::pair<MultiPoly, MultiPoly> j_invariant_pair(const StandardInvariants& inv) {
  return {inv.c4.pow(3), inv.delta};
}

bool j_is_constant(const WeierstrassModel& m) {
  StandardInvariants inv = standard_invariants(m);
  auto [num, den] = j_invariant_pair(inv);
  if (num.is_zero()) return true;  // j == 0
  // j constant <=> c4^3 and Delta are proportional polynomials.
  Rat lc_num = u_lc(num, m.base_var);
  Rat lc_den = u_lc(den, m.base_var);
  return num * lc_den == den * lc_num;
}

namespace {

// Multiplies c with Rat scalars 4, 24... convenience for int * MultiPoly.
// (operator overloads for Rat cover it; nothing needed here.)

int valuation_or_large(const MultiPoly& p, const Place& place) {
  // Sentinel for v(0) = +infinity; larger than any honest valuation here.
  constexpr int kInfinite = 1 << 20;
  if (p.is_zero()) return kInfinite;
  return valuation(p, place);
}

WeierstrassModel depress(const WeierstrassModel& m,
                         const StandardInvariants& inv) {
  MultiPoly a4 = inv.c4 * Rat(-1, 48);
  MultiPoly a6 = inv.c6 * Rat(-1, 864);
  return WeierstrassModel::simplified(m.base_var, MultiPoly(), a4, a6);
}

}  // namespace

MinimalizeResult minimalize_at(const WeierstrassModel& m, const Place& place) {
  if (!place.is_finite())
    throw math_error("minimalize_at expects a finite place");
  MinimalizeResult out{m, 0, false};
  const MultiPoly& g = place.poly;
  while (true) {
    StandardInvariants inv = standard_invariants(out.model);
    int vc4 = valuation_or_large(inv.c4, place);
    int vc6 = valuation_or_large(inv.c6, place);
    int vd = valuation(inv.delta, place);
    if (!(vc4 >= 4 && vc6 >= 6 && vd >= 12)) break;
    const int weights[5] = {1, 2, 3, 4, 6};
    const MultiPoly* coeffs[5] = {&out.model.a1, &out.model.a2, &out.model.a3,
                                  &out.model.a4, &out.model.a6};
    WeierstrassModel next = out.model;
    MultiPoly* next_coeffs[5] = {&next.a1, &next.a2, &next.a3, &next.a4,
                                 &next.a6};
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      MultiPoly reduced = *coeffs[i];
      for (int w = 0; w < weights[i] && ok; ++w) {
        auto q = reduced.try_exact_div(g);
        if (q)
          reduced = *q;
        else
          ok = false;
      }
      if (ok) *next_coeffs[i] = reduced;
    }
    if (ok) {
      out.model = next;
      ++out.rescales;
      continue;
    }
    if (!out.depressed) {
      // The short form has a4 = -c4/48, a6 = -c6/864 whose valuations are
      // exactly v(c4) >= 4 and v(c6) >= 6, so the rescale goes through.
      out.model = depress(out.model, inv);
      out.depressed = true;
      continue;
    }
    throw math_error("minimal model search failed to make progress");
  }
  return out;
}

FlipResult flip_model(const WeierstrassModel& m) {
  const std::string& t = m.base_var;
  int d = 0;
  const int weights[5] = {1, 2, 3, 4, 6};
  const MultiPoly* coeffs[5] = {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
  for (int i = 0; i < 5; ++i) {
    if (coeffs[i]->is_zero()) continue;
    int deg = u_degree(*coeffs[i], t);
    d = std::max(d, (deg + weights[i] - 1) / weights[i]);
  }
  FlipResult out;
  out.weight = d;
  out.model.base_var = t;
  MultiPoly* flipped[5] = {&out.model.a1, &out.model.a2, &out.model.a3,
                           &out.model.a4, &out.model.a6};
  MultiPoly s = MultiPoly::variable(t, {t});
  for (int i = 0; i < 5; ++i) {
    MultiPoly acc(VarList{t});
    if (!coeffs[i]->is_zero()) {
      int deg = u_degree(*coeffs[i], t);
      for (int e = 0; e <= deg; ++e) {
        Rat c = coeffs[i]->coeff_of(t, e).constant_value();
        if (c == 0) continue;
        acc = acc + s.pow(weights[i] * d - e) * c;
      }
    }
    *flipped[i] = acc;
  }
  return out;
}

WeierstrassModel model_from_equation(const MultiPoly& lhs, const MultiPoly& rhs,
                                     const std::string& x, const std::string& y,
                                     const std::string& base_var) {
  MultiPoly q = rhs - lhs;
  MultiPoly y2 = q.coeff_of(y, 2);
  if (!y2.is_constant() || (y2.constant_value() != 1 && y2.constant_value() != -1))
    throw input_error("equation is not a Weierstrass cubic: bad y^2 term");
  if (y2.constant_value() == 1) q = -q;
  // Now q = -(y^2 + a1*x*y + a3*y) + x^3 + a2*x^2 + a4*x + a6.
  MultiPoly y1 = q.coeff_of(y, 1);
  WeierstrassModel m;
  m.base_var = base_var;
  m.a1 = -y1.coeff_of(x, 1);
  m.a3 = -y1.coeff_of(x, 0);
  MultiPoly y0 = q.coeff_of(y, 0);
  MultiPoly x3 = y0.coeff_of(x, 3);
  if (!x3.is_constant() || x3.constant_value() != 1)
    throw input_error("equation is not a Weierstrass cubic: x^3 term must be 1");
  m.a2 = y0.coeff_of(x, 2);
  m.a4 = y0.coeff_of(x, 1);
  m.a6 = y0.coeff_of(x, 0);
  for (const MultiPoly* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
    if (!is_univariate_in(*a, base_var))
      throw input_error("coefficient involves x or y: not a Weierstrass cubic");
  // Rebuild and compare to catch stray monomials (y^3, x^4*y, ...).
  VarList xy = {x, y};
  MultiPoly xv = MultiPoly::variable(x, xy);
  MultiPoly yv = MultiPoly::variable(y, xy);
  MultiPoly rebuilt = xv.pow(3) + m.a2 * xv * xv + m.a4 * xv + m.a6 -
                      (yv * yv + m.a1 * xv * yv + m.a3 * yv);
  if (rebuilt != q)
    throw input_error("equation contains terms outside the Weierstrass shape");
  return m;
}

}  // namespace ellq
