#pragma once
// Univariate layer over the sparse polynomial type: Euclidean gcd, Yun's
// squarefree decomposition, gcd-free bases, places of the affine line and
// local valuations.  All routines take the active variable explicitly and
// reject polynomials that involve any other variable.

#include <optional>
#include <string>
#include <vector>

#include "ellq/poly.hpp"

namespace ellq {

// A closed point of P^1 over Q: either the vanishing locus of a monic
// squarefree nonconstant polynomial (a Galois orbit of points, possibly
// several -- the residue degree is the polynomial degree) or the point at
// infinity.
struct Place {
  enum class Kind { Finite, Infinity };

  Kind kind = Kind::Infinity;
  MultiPoly poly;   // meaningful for Finite: monic squarefree nonconstant
  std::string var;  // base variable name

  static Place finite(const MultiPoly& g, const std::string& var);
  static Place infinity(const std::string& var);

  bool is_finite() const { return kind == Kind::Finite; }
  // Residue field degree over Q (1 at infinity).
  int degree() const;
  std::string str() const;
  bool operator==(const Place& rhs) const;
};

bool is_univariate_in(const MultiPoly& p, const std::string& var);
// Throws math_error if p involves a variable other than var.
void require_univariate(const MultiPoly& p, const std::string& var);

// Degree in var; -1 for the zero polynomial.
int u_degree(const MultiPoly& p, const std::string& var);
Rat u_lc(const MultiPoly& p, const std::string& var);
MultiPoly u_monic(const MultiPoly& p, const std::string& var);

// Monic gcd (the constant 1 when coprime); gcd(p, 0) = monic p.
MultiPoly u_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& var);

// p = constant * prod factors[k].first ^ factors[k].second with monic
// squarefree pairwise-coprime factors and strictly increasing multiplicity.
struct SquarefreeDecomposition {
  Rat constant;
  std::vector<std::pair<MultiPoly, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const MultiPoly& p,
                                                 const std::string& var);

// Pairwise-coprime monic squarefree basis refining the squarefree parts of
// all inputs: inputs[i] = constants[i] * prod_j basis[j]^exponents[i][j].
struct GcdFreeBasis {
  std::vector<MultiPoly> basis;
  std::vector<std::vector<int>> exponents;
  std::vector<Rat> constants;
};
GcdFreeBasis gcd_free_basis(const std::vector<MultiPoly>& inputs,
                            const std::string& var);

// Order of vanishing of p != 0 at the place.  At a finite place g the value
// is the largest k with g^k | p, provided the remaining cofactor is coprime
// to g; otherwise g mixes points with different orders and
// split_place_error is raised.  At infinity returns -deg(p).
int valuation(const MultiPoly& p, const Place& place);

// Exact square root of p as a polynomial in var, if one exists.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p, const std::string& var);

}  // namespace ellq
