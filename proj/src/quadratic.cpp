#include "mtc/quadratic.hpp"

namespace mtc {

MismatchedExtension::MismatchedExtension(const Integer& d1, const Integer& d2)
    : std::invalid_argument("mismatched quadratic extensions: d = " + mtc::to_string(d1) + " vs d = " +
                            mtc::to_string(d2)) {}

QuadraticElement::QuadraticElement(Rational u, Rational v, Integer d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
  if (d_ == 0) throw std::invalid_argument("quadratic extension requires d != 0");
  // mpq arithmetic assumes canonical operands.
  u_.canonicalize();
  v_.canonicalize();
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& o) {
  require_same(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& o) {
  require_same(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadraticElement& QuadraticElement::operator*=(const QuadraticElement& o) {
  require_same(o);
  Rational u = u_ * o.u_ + v_ * o.v_ * d_;
  Rational v = u_ * o.v_ + o.u_ * v_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadraticElement& QuadraticElement::operator/=(const QuadraticElement& o) {
  require_same(o);
  const Rational n = o.norm();
  if (n == 0) throw DivisionByZero();
  *this *= o.conjugate();
  u_ /= n;
  v_ /= n;
  return *this;
}

std::string QuadraticElement::to_string() const {
  return mtc::to_string(u_) + " + " + mtc::to_string(v_) + "*sqrt(" + mtc::to_string(d_) + ")";
}

QuadraticElement pow(const QuadraticElement& base, long exponent) {
  QuadraticElement b = base;
  if (exponent < 0) {
    b = QuadraticElement::rational(Rational(1), base.d()) / base;
    exponent = -exponent;
  }
  QuadraticElement result = QuadraticElement::rational(Rational(1), base.d());
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace mtc
