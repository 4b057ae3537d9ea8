#pragma once

// Polynomial families in x built from the integer sequences.

#include "mtc/polynomial.hpp"

#include <cstdint>

namespace mtc {

/// s_n(x) = sum_{k=1}^n N(n,k) x^(k-1) (x+1)^(n-k), n >= 1.
IntPolynomial s_poly(std::int64_t n);

/// S_n^(h)(x) = sum_{k=0}^n C(n+k,2k)^h C_k^h x^k, n >= 0, h >= 1.
/// For h = 1 this is the large Schröder polynomial S_n(x).
IntPolynomial big_schroder_poly(std::int64_t n, std::int64_t h = 1);

/// S_n(x) through its other closed form sum_k C(n,k) C(n+k,k) x^k / (k+1).
IntPolynomial big_schroder_poly_binomial_form(std::int64_t n);

/// w_n^(h)(x) = sum_{k=1}^n w(n,k)^h x^(k-1), n >= 1, h >= 1.
IntPolynomial w_poly(std::int64_t n, std::int64_t h = 1);

/// x(x+1) = x + x^2.
IntPolynomial x_times_x_plus_one();

}  // namespace mtc
