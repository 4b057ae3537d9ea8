#include "mtc/integer.hpp"

namespace mtc {

NonIntegral::NonIntegral(const Integer& dividend, const Integer& divisor, const Integer& remainder)
    : std::runtime_error("non-integral quotient: " + to_string(dividend) + " / " + to_string(divisor) +
                         " leaves remainder " + to_string(remainder)),
      dividend_(dividend),
      divisor_(divisor),
      remainder_(remainder) {}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer pow(long base, unsigned long exponent) { return pow(Integer(base), exponent); }

bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer exact_quotient(const Integer& x, const Integer& d) {
  if (d == 0) {
    if (x == 0) throw std::domain_error("0 / 0 is indeterminate");
    throw NonIntegral(x, d, x);
  }
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw NonIntegral(x, d, r);
  return q;
}

Integer mod(const Integer& x, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

bool perfect_square_root(const Integer& x, Integer& root) {
  if (x < 0) return false;
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  return true;
}

}  // namespace mtc
