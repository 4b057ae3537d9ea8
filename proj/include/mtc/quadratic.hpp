#pragma once

// Exact arithmetic in Q(sqrt d): elements u + v*sqrt(d) with rational u, v.

#include "mtc/integer.hpp"

#include <stdexcept>
#include <string>

namespace mtc {

class MismatchedExtension : public std::invalid_argument {
 public:
  MismatchedExtension(const Integer& d1, const Integer& d2);
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in quadratic extension") {}
};

class QuadraticElement {
 public:
  /// u + v*sqrt(d); d must be nonzero.
  QuadraticElement(Rational u, Rational v, Integer d);

  static QuadraticElement rational(Rational u, Integer d) { return {std::move(u), Rational(0), std::move(d)}; }
  static QuadraticElement sqrt_d(Integer d) { return {Rational(0), Rational(1), std::move(d)}; }

  const Rational& u() const noexcept { return u_; }
  const Rational& v() const noexcept { return v_; }
  const Integer& d() const noexcept { return d_; }

  bool is_rational() const { return v_ == 0; }
  /// u^2 - d v^2
  Rational norm() const { return u_ * u_ - v_ * v_ * d_; }
  QuadraticElement conjugate() const { return {u_, -v_, d_}; }

  QuadraticElement& operator+=(const QuadraticElement& o);
  QuadraticElement& operator-=(const QuadraticElement& o);
  QuadraticElement& operator*=(const QuadraticElement& o);
  QuadraticElement& operator/=(const QuadraticElement& o);

  friend QuadraticElement operator+(QuadraticElement a, const QuadraticElement& b) { return a += b; }
  friend QuadraticElement operator-(QuadraticElement a, const QuadraticElement& b) { return a -= b; }
  friend QuadraticElement operator*(QuadraticElement a, const QuadraticElement& b) { return a *= b; }
  friend QuadraticElement operator/(QuadraticElement a, const QuadraticElement& b) { return a /= b; }
  friend QuadraticElement operator-(const QuadraticElement& a) { return {-a.u_, -a.v_, a.d_}; }

  // Scalars stay in the element's own extension.
  friend QuadraticElement operator+(QuadraticElement a, const Rational& s) {
    a.u_ += s;
    return a;
  }
  friend QuadraticElement operator*(QuadraticElement a, const Rational& s) {
    a.u_ *= s;
    a.v_ *= s;
    return a;
  }
  friend QuadraticElement operator+(QuadraticElement a, const Integer& s) { return std::move(a) + Rational(s); }
  friend QuadraticElement operator*(QuadraticElement a, const Integer& s) { return std::move(a) * Rational(s); }

  friend bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

  std::string to_string() const;

 private:
  void require_same(const QuadraticElement& o) const {
    if (d_ != o.d_) throw MismatchedExtension(d_, o.d_);
  }

  Rational u_;
  Rational v_;
  Integer d_;
};

/// Integer powers; negative exponents invert (DivisionByZero on zero norm).
QuadraticElement pow(const QuadraticElement& base, long exponent);

}  // namespace mtc
