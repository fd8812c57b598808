#include "ellq/rational.hpp"

namespace ellq {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw math_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& x, long e) {
  if (e < 0) {
    if (x == 0) throw math_error("negative power of zero");
    return 1 / rat_pow(x, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  // num/den already coprime, so the powers are too.
  return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& text) {
  Rat q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw input_error("malformed rational literal: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw input_error("zero denominator in rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_den_mpz_t()) == 0) return std::nullopt;
  Rat r;
  mpz_sqrt(r.get_num_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rat rat_mod(const Rat& x, long m) {
  if (m <= 0) throw math_error("rat_mod requires positive modulus");
  // x - floor(x/m)*m
  Rat q = x / m;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return x - Rat(fl) * m;
}

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw math_error("integer does not fit in machine long");
  return x.get_si();
}

}  // namespace ellq
