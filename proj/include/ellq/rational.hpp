#pragma once
// Exact scalar arithmetic over Z and Q, backed by GMP.
//
// Every quantity in this library is exact: integers are arbitrary-precision
// (mpz) and rationals are always kept in lowest terms with positive
// denominator (mpq canonical form).  No floating point appears anywhere.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ellq {

using Int = mpz_class;
using Rat = mpq_class;

// Raised for malformed user input (bad syntax, unknown variable, negative
// exponent, out-of-range argument, ...).  The command line maps this to a
// distinct exit code.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation cannot proceed (division not exact, degenerate
// Weierstrass model, valuation at a reducible place, ...).
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by local valuation when the given place polynomial splits, i.e. it
// has a proper nontrivial common factor with the argument, so a single
// integer valuation is not defined.  Callers that build places from a
// gcd-free basis never see this.
struct split_place_error : math_error {
  using math_error::math_error;
};

// num/den reduced to lowest terms, den > 0.  Throws math_error if den == 0.
Rat make_rat(const Int& num, const Int& den);

// x^e for e >= 0; for e < 0 requires x != 0.
Rat rat_pow(const Rat& x, long e);

// Canonical text form: "a" for integers, "a/b" otherwise, '-' in front.
std::string rat_str(const Rat& x);

// Parses "a" or "a/b" with optional leading '-'.  Throws input_error.
Rat parse_rat(const std::string& text);

bool rat_is_integer(const Rat& x);

// Exact square root when x is the square of a rational, std::nullopt
// otherwise.  The returned root is >= 0.
std::optional<Rat> rat_sqrt(const Rat& x);

// Representative of x mod m in [0, m) for integer modulus m > 0.
Rat rat_mod(const Rat& x, long m);

// Convenience: exact conversion to long, throws math_error on overflow.
long to_long(const Int& x);

}  // namespace ellq
