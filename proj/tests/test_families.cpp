#include "doctest.h"
#include "mtc/families.hpp"
#include "mtc/sequences.hpp"
#include "oracles.hpp"

using namespace mtc;

namespace {

IntPolynomial P(std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("small Schroeder polynomials") {
  CHECK(s_poly(1) == P({1}));
  CHECK(s_poly(2) == P({1, 2}));
  CHECK_THROWS(s_poly(0));
  for (std::int64_t n = 1; n <= 14; ++n) CHECK(s_poly(n) == IntPolynomial(oracle::s_poly_coeffs(n)));
  for (std::int64_t n = 1; n <= 100; ++n) CHECK(s_poly(n).evaluate(Integer(1)) == schroder_little(n));
}

TEST_CASE("large Schroeder polynomials") {
  CHECK(big_schroder_poly(2) == P({1, 3, 2}));
  for (std::int64_t h = 1; h <= 4; ++h) CHECK(big_schroder_poly(0, h) == P({1}));
  CHECK_THROWS(big_schroder_poly(-1));
  CHECK_THROWS(big_schroder_poly(2, 0));
  const IntPolynomial x_plus_one = P({1, 1});
  for (std::int64_t n = 1; n <= 100; ++n) {
    CHECK(big_schroder_poly(n) == x_plus_one * s_poly(n));
    CHECK(big_schroder_poly(n) == big_schroder_poly_binomial_form(n));
  }
  for (std::uint64_t n = 0; n <= 60; ++n) CHECK(big_schroder_poly(static_cast<std::int64_t>(n)).evaluate(Integer(1)) == schroder_large(n));
  // h = 2: coefficients square
  const IntPolynomial s1 = big_schroder_poly(5), s2 = big_schroder_poly(5, 2);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(s2.coefficient(k) == s1.coefficient(k) * s1.coefficient(k));
}

TEST_CASE("w polynomials") {
  CHECK(w_poly(2) == P({1, 2}));
  for (std::int64_t h = 1; h <= 4; ++h) CHECK(w_poly(1, h) == P({1}));
  CHECK_THROWS(w_poly(0));
  for (std::int64_t n = 1; n <= 60; ++n) CHECK(w_poly(n) == s_poly(n));
  const IntPolynomial w3 = w_poly(6, 3);
  for (std::int64_t k = 1; k <= 6; ++k) CHECK(w3.coefficient(static_cast<std::size_t>(k - 1)) == pow(w_coeff(6, k), 3));
}

TEST_CASE("x(x+1)") { CHECK(x_times_x_plus_one() == P({0, 1, 1})); }
