#include "mtc/polynomial.hpp"

#include <cctype>

namespace mtc {

RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

std::optional<IntPolynomial> to_integer(const RationalPolynomial& p) {
  std::vector<Integer> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!is_integral(c)) return std::nullopt;
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

NotDivisible::NotDivisible(RationalPolynomial remainder)
    : std::runtime_error("polynomial not divisible; remainder " + render(remainder)),
      remainder_(std::move(remainder)) {}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial();
  if (a.is_zero() || *a.degree() < *b.degree()) return {RationalPolynomial{}, a};
  const std::size_t db = *b.degree();
  const std::size_t da = *a.degree();
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(da - db + 1);
  const Rational& lead = b.leading();
  for (std::size_t i = da - db + 1; i-- > 0;) {
    if (rem[i + db] == 0) continue;
    Rational q = rem[i + db] / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coefficients()[j];
    quot[i] = std::move(q);
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial();
  if (a.is_zero()) return {};
  if (*a.degree() < *b.degree()) throw NotDivisible(to_rational(a));
  const std::size_t db = *b.degree();
  const std::size_t da = *a.degree();
  const auto& bc = b.coefficients();
  const Integer& lead = b.leading();
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(da - db + 1);
  for (std::size_t i = da - db + 1; i-- > 0;) {
    Integer& top = rem[i + db];
    if (top == 0) continue;
    if (!divides(lead, top)) {
      // The quotient leaves Z[x]; report the remainder over Q.
      throw NotDivisible(divmod(to_rational(a), to_rational(b)).second);
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    quot[i] = std::move(q);
  }
  rem.resize(db);
  IntPolynomial remainder(std::move(rem));
  if (!remainder.is_zero()) throw NotDivisible(to_rational(remainder));
  return IntPolynomial(std::move(quot));
}

IntPolynomial fold_cyclic(const IntPolynomial& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("fold_cyclic: n must be positive");
  const auto& c = p.coefficients();
  if (c.size() <= n) return p;
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < c.size(); ++i) out[i % n] += c[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial mul_cyclic(const IntPolynomial& a, const IntPolynomial& b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("mul_cyclic: n must be positive");
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(n);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      mpz_addmul(out[(i + j) % n].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

namespace {

template <class Coeff>
std::string render_impl(const DensePolynomial<Coeff>& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Coeff mag = abs(c[i]);
    out += mag.get_str();
    if (i >= 1) {
      out += '*';
      out += var;
    }
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace

std::string render(const IntPolynomial& p, char var) { return render_impl(p, var); }
std::string render(const RationalPolynomial& p, char var) { return render_impl(p, var); }

IntPolynomial parse_int_polynomial(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");

  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;

    const std::size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const bool has_coeff = pos > digits_begin;
    Integer coeff = has_coeff ? Integer(s.substr(digits_begin, pos - digits_begin)) : Integer(1);

    std::size_t degree = 0;
    bool has_var = false;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) throw ParseError("'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != var) throw ParseError(std::string("expected variable '") + var + "'");
    }
    if (pos < s.size() && s[pos] == var) {
      has_var = true;
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t exp_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == exp_begin) throw ParseError("missing exponent");
        degree = std::stoul(s.substr(exp_begin, pos - exp_begin));
      }
    }
    if (!has_coeff && !has_var) throw ParseError("empty term at offset " + std::to_string(digits_begin));
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw ParseError("unexpected character '" + std::string(1, s[pos]) + "'");

    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += sign * coeff;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace mtc
