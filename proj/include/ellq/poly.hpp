#pragma once
// Sparse multivariate polynomials over Q with exact coefficients.
//
// A polynomial carries its own variable context (an ordered list of names).
// Terms are stored in a map keyed by exponent vectors, ordered by descending
// graded lexicographic order, which is also the canonical printing order.
// Arithmetic between polynomials with different contexts merges the contexts
// automatically; the merge preserves the relative order of shared names and
// rejects contexts that disagree on it.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellq/rational.hpp"

namespace ellq {

using VarList = std::vector<std::string>;

// Strict weak ordering on exponent vectors of equal length: a before b iff
// a > b in graded lexicographic order (higher total degree first, ties broken
// by the first differing exponent, larger first).
struct GradedLexDesc {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rat, GradedLexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const Rat& value, VarList vars = {});
  // The named variable as a polynomial; adds the name to vars if absent.
  static MultiPoly variable(const std::string& name, VarList vars);

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial gives 0).
  Rat constant_value() const;

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(const std::string& var) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly pow(int e) const;  // e >= 0

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  // Exact division: returns q with *this == q * d, throws math_error when no
  // such polynomial exists.
  MultiPoly exact_div(const MultiPoly& d) const;
  std::optional<MultiPoly> try_exact_div(const MultiPoly& d) const;

  MultiPoly derivative(const std::string& var) const;

  // Substitutes rational constants for some variables; the context is kept
  // unchanged so results stay comparable.
  MultiPoly specialize(const std::map<std::string, Rat>& values) const;

  // Evaluates with every variable assigned.
  Rat eval(const std::map<std::string, Rat>& values) const;

  // var -> var^k for k >= 1 (multiplies exponents; exact monomial pullback).
  MultiPoly substitute_power(const std::string& var, int k) const;

  // Substitutes var -> num/den for each mapped variable and clears all
  // denominators.  Returns the numerator polynomial N such that
  //   p(num/den, ...) = N / prod_v den_v^{deg_v(p)}.
  MultiPoly substitute_rational(
      const std::map<std::string, std::pair<MultiPoly, MultiPoly>>& images) const;

  // Rewrites var^(k*n + r) -> replacement^k * var^r throughout (0 <= r < n),
  // i.e. reduces modulo the relation var^n = replacement.  The replacement
  // must not involve var.
  MultiPoly reduce_power_relation(const std::string& var, int n,
                                  const MultiPoly& replacement) const;

  // Adds missing names (error if relative order of shared names conflicts).
  MultiPoly with_vars(const VarList& vars) const;

  // Single coefficient access in the full context.
  Rat coeff(const std::vector<int>& exponents) const;

  // Coefficient of var^k as a polynomial in the remaining variables
  // (context is preserved).
  MultiPoly coeff_of(const std::string& var, int k) const;

  // Canonical text form; parse(to_string(p)) == p.
  std::string to_string() const;

 private:
  void insert_term(const std::vector<int>& exps, const Rat& coef);
  int var_index(const std::string& var) const;  // -1 if absent

  VarList vars_;
  TermMap terms_;

  friend MultiPoly merge_align(const MultiPoly& p, const VarList& merged);
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);
MultiPoly operator+(const MultiPoly& p, const Rat& c);
MultiPoly operator+(const Rat& c, const MultiPoly& p);
MultiPoly operator-(const MultiPoly& p, const Rat& c);
MultiPoly operator-(const Rat& c, const MultiPoly& p);

// Merged context containing both lists, preserving the relative order of the
// names each list declares.  Throws math_error when the lists order a shared
// pair of names inconsistently.
VarList merge_contexts(const VarList& a, const VarList& b);

// Recursive-descent parser for the canonical grammar: integers, rational
// literals a/b, declared variable names, '+', '-', '*', '^' and parentheses.
// Multiplication is always explicit, exponents are nonnegative integers.
// Throws input_error with a position on malformed input.
MultiPoly parse_poly(const std::string& text, const VarList& vars);

// Identifiers appearing in the text in order of first occurrence (used to
// infer a variable context for equation files).
std::vector<std::string> scan_identifiers(const std::string& text);

}  // namespace ellq
