#include "ellq/univariate.hpp"

namespace ellq {

bool is_univariate_in(const MultiPoly& p, const std::string& var) {
  for (size_t k = 0; k < p.vars().size(); ++k) {
    if (p.vars()[k] == var) continue;
    for (const auto& [e, c] : p.terms())
      if (e[k] != 0) return false;
  }
  return true;
}

void require_univariate(const MultiPoly& p, const std::string& var) {
  if (!is_univariate_in(p, var))
    throw math_error("expected a polynomial in '" + var + "' only, got " +
                     p.to_string());
}

int u_degree(const MultiPoly& p, const std::string& var) {
  require_univariate(p, var);
  if (p.is_zero()) return -1;
  return std::max(0, p.degree_in(var));
}

Rat u_lc(const MultiPoly& p, const std::string& var) {
  int d = u_degree(p, var);
  if (d < 0) return 0;
  return p.coeff_of(var, d).constant_value();
}

MultiPoly u_monic(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) return p;
  return p * (1 / u_lc(p, var));
}

namespace {

// Remainder of a modulo b (deg b >= 0), both univariate in var.
MultiPoly u_rem(MultiPoly a, const MultiPoly& b, const std::string& var) {
  int db = u_degree(b, var);
  if (db < 0) throw math_error("remainder modulo zero polynomial");
  Rat lb = u_lc(b, var);
  int da = u_degree(a, var);
  while (!a.is_zero() && da >= db) {
    Rat la = u_lc(a, var);
    MultiPoly shift = MultiPoly::variable(var, a.vars()).pow(da - db);
    a = a - shift * b * (la / lb);
    da = a.is_zero() ? -1 : u_degree(a, var);
  }
  return a;
}

}  // namespace

MultiPoly u_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
  require_univariate(a, var);
  require_univariate(b, var);
  MultiPoly x = a, y = b;
  while (!y.is_zero()) {
    MultiPoly r = u_rem(x, y, var);
    x = y;
    y = u_monic(r, var);  // keep coefficients small
  }
  if (x.is_zero()) return x;
  return u_monic(x, var);
}

SquarefreeDecomposition squarefree_decomposition(const MultiPoly& p,
                                                 const std::string& var) {
  require_univariate(p, var);
  if (p.is_zero())
    throw math_error("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.constant = u_lc(p, var);
  MultiPoly P = u_monic(p, var);
  if (u_degree(P, var) == 0) return out;
  // Yun's algorithm (characteristic zero).
  MultiPoly dP = P.derivative(var);
  MultiPoly g = u_gcd(P, dP, var);
  MultiPoly c = P.exact_div(g);
  MultiPoly d = dP.exact_div(g) - c.derivative(var);
  int i = 1;
  while (u_degree(c, var) > 0) {
    MultiPoly f = u_gcd(c, d, var);
    if (u_degree(f, var) > 0) out.factors.emplace_back(f, i);
    c = c.exact_div(f);
    d = d.exact_div(f) - c.derivative(var);
    ++i;
  }
  return out;
}

GcdFreeBasis gcd_free_basis(const std::vector<MultiPoly>& inputs,
                            const std::string& var) {
  GcdFreeBasis out;
  // Refine the squarefree parts of all inputs into pairwise-coprime pieces.
  for (const auto& input : inputs) {
    SquarefreeDecomposition sq = squarefree_decomposition(input, var);
    for (const auto& [factor, mult] : sq.factors) {
      (void)mult;
      MultiPoly f = factor;
      for (size_t j = 0; j < out.basis.size() && u_degree(f, var) > 0; ++j) {
        MultiPoly g = u_gcd(f, out.basis[j], var);
        if (u_degree(g, var) == 0) continue;
        if (u_degree(g, var) < u_degree(out.basis[j], var)) {
          MultiPoly rest = out.basis[j].exact_div(g);
          out.basis[j] = g;
          // rest is coprime to what is left of f; park it after g.
          out.basis.insert(out.basis.begin() + static_cast<long>(j) + 1, rest);
          ++j;
        }
        f = f.exact_div(g);
      }
      if (u_degree(f, var) > 0) out.basis.push_back(f);
    }
  }
  std::sort(out.basis.begin(), out.basis.end(),
            [&](const MultiPoly& a, const MultiPoly& b) {
              int da = u_degree(a, var), db = u_degree(b, var);
              if (da != db) return da < db;
              return a.to_string() < b.to_string();
            });
  for (const auto& input : inputs) {
    out.constants.push_back(u_lc(input, var));
    std::vector<int> row;
    for (const auto& b : out.basis)
      row.push_back(valuation(input, Place::finite(b, var)));
    out.exponents.push_back(std::move(row));
  }
  return out;
}

Place Place::finite(const MultiPoly& g, const std::string& var) {
  require_univariate(g, var);
  if (u_degree(g, var) < 1)
    throw math_error("a finite place needs a nonconstant polynomial");
  MultiPoly m = u_monic(g, var);
  if (u_degree(u_gcd(m, m.derivative(var), var), var) != 0)
    throw math_error("a finite place needs a squarefree polynomial");
  Place p;
  p.kind = Kind::Finite;
  p.poly = m;
  p.var = var;
  return p;
}

Place Place::infinity(const std::string& var) {
  Place p;
  p.kind = Kind::Infinity;
  p.var = var;
  return p;
}

int Place::degree() const {
  return kind == Kind::Finite ? u_degree(poly, var) : 1;
}

std::string Place::str() const {
  return kind == Kind::Finite ? poly.to_string() : "infinity";
}

bool Place::operator==(const Place& rhs) const {
  if (kind != rhs.kind || var != rhs.var) return false;
  return kind == Kind::Infinity || poly == rhs.poly;
}

int valuation(const MultiPoly& p, const Place& place) {
  require_univariate(p, place.var);
  if (p.is_zero()) throw math_error("valuation of the zero polynomial");
  if (place.kind == Place::Kind::Infinity) return -u_degree(p, place.var);
  int k = 0;
  MultiPoly r = p;
  while (true) {
    auto q = r.try_exact_div(place.poly);
    if (!q) break;
    r = *q;
    ++k;
  }
  if (u_degree(u_gcd(r, place.poly, place.var), place.var) != 0)
    throw split_place_error(
        "place '" + place.poly.to_string() +
        "' mixes points with different vanishing orders; refine it first");
  return k;
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p, const std::string& var) {
  require_univariate(p, var);
  if (p.is_zero()) return p;
  SquarefreeDecomposition sq = squarefree_decomposition(p, var);
  auto c = rat_sqrt(sq.constant);
  if (!c) return std::nullopt;
  MultiPoly root = MultiPoly::constant(*c, p.vars());
  for (const auto& [factor, mult] : sq.factors) {
    if (mult % 2 != 0) return std::nullopt;
    root = root * factor.pow(mult / 2);
  }
  return root;
}

}  // namespace ellq
