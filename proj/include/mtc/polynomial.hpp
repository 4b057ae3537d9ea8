#pragma once

// Dense univariate polynomials over Z and Q.
//
// Coefficients are stored in ascending degree order and kept canonical: the
// highest stored coefficient is nonzero, and the zero polynomial stores
// nothing. The zero polynomial has no degree (std::nullopt).

#include "mtc/integer.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace mtc {

template <class Coeff>
class DensePolynomial {
 public:
  using coefficient_type = Coeff;

  DensePolynomial() = default;
  DensePolynomial(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit DensePolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DensePolynomial monomial(Coeff c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return DensePolynomial(std::move(v));
  }
  static DensePolynomial variable() { return monomial(Coeff(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  Coeff coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  DensePolynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  DensePolynomial& operator*=(const DensePolynomial& o) { return *this = *this * o; }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
  friend DensePolynomial operator-(DensePolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend DensePolynomial operator*(DensePolynomial a, const Coeff& s) { return a *= s; }
  friend DensePolynomial operator*(const Coeff& s, DensePolynomial a) { return a *= s; }

  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if constexpr (std::is_same_v<Coeff, Integer>) {
          mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        } else {
          out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
      }
    }
    return DensePolynomial(std::move(out));
  }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation in any ring supporting Ring*Ring, Ring*Coeff and Ring+Coeff.
  template <class Ring>
  Ring evaluate_as(const Ring& x) const {
    Ring acc = x * Coeff(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Coeff evaluate(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = DensePolynomial<Integer>;
using RationalPolynomial = DensePolynomial<Rational>;

template <class Coeff>
DensePolynomial<Coeff> pow(DensePolynomial<Coeff> base, unsigned long exponent) {
  DensePolynomial<Coeff> result(Coeff(1));
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

RationalPolynomial to_rational(const IntPolynomial& p);
/// Converts back to Z[x] if every coefficient is integral.
std::optional<IntPolynomial> to_integer(const RationalPolynomial& p);

class DivisionByZeroPolynomial : public std::domain_error {
 public:
  DivisionByZeroPolynomial() : std::domain_error("division by the zero polynomial") {}
};

/// a is not a multiple of b in Z[x]. Carries the remainder of division in Q[x].
class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(RationalPolynomial remainder);
  const RationalPolynomial& remainder() const noexcept { return remainder_; }

 private:
  RationalPolynomial remainder_;
};

/// Quotient and remainder in Q[x]: a = b*quotient + remainder, deg remainder < deg b.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b);

/// q with a = b*q in Z[x]; throws NotDivisible or DivisionByZeroPolynomial.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

/// Reduces modulo x^n - 1 by folding exponents mod n (n >= 1).
IntPolynomial fold_cyclic(const IntPolynomial& p, std::size_t n);
/// (a*b) mod (x^n - 1) for a, b already of degree < n.
IntPolynomial mul_cyclic(const IntPolynomial& a, const IntPolynomial& b, std::size_t n);

/// Renders "c0 + c1*q + c2*q^2 - c3*q^3" in ascending order, zero terms
/// omitted, the zero polynomial as "0".
std::string render(const IntPolynomial& p, char var = 'q');
std::string render(const RationalPolynomial& p, char var = 'q');

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses the rendered format back. Also accepts omitted unit coefficients
/// ("q^2"), terms in any order, and arbitrary spacing.
IntPolynomial parse_int_polynomial(std::string_view text, char var = 'q');

}  // namespace mtc
