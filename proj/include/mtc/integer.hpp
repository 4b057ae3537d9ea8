#pragma once

// Arbitrary-precision integer and rational types shared by every module.
// Values are GMP-backed; nothing in this library ever narrows to a
// fixed-width type before a final, explicit conversion.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a quotient that must be integral leaves a remainder.
class NonIntegral : public std::runtime_error {
 public:
  NonIntegral(const Integer& dividend, const Integer& divisor, const Integer& remainder);

  const Integer& dividend() const noexcept { return dividend_; }
  const Integer& divisor() const noexcept { return divisor_; }
  const Integer& remainder() const noexcept { return remainder_; }

 private:
  Integer dividend_;
  Integer divisor_;
  Integer remainder_;
};

Integer pow(const Integer& base, unsigned long exponent);
Integer pow(long base, unsigned long exponent);

/// d | x, with the convention that 0 | x holds only for x = 0.
bool divides(const Integer& d, const Integer& x);

/// x / d, throwing NonIntegral unless d divides x exactly.
Integer exact_quotient(const Integer& x, const Integer& d);

/// Least non-negative residue of x modulo m (m > 0).
Integer mod(const Integer& x, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

/// (-1)^e as an Integer.
inline Integer sign_power(unsigned long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den);

bool is_integral(const Rational& x);

/// Exact integer square root if x is a perfect square (x >= 0), else false.
bool perfect_square_root(const Integer& x, Integer& root);

}  // namespace mtc
