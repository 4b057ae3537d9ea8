#pragma once

// q-analogues: [n]_q, Gaussian binomials and cyclotomic polynomials.

#include "mtc/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace mtc {

/// 1 + q + ... + q^(n-1); the zero polynomial for n = 0.
IntPolynomial q_integer(std::uint64_t n);

/// Gaussian binomial [n, k]_q for n, k >= 0, from the recursion
/// [n,k] = q^k [n-1,k] + [n-1,k-1]. Rows are memoized.
IntPolynomial q_binomial(std::uint64_t n, std::uint64_t k);

/// n-th cyclotomic polynomial, by exact division of q^n - 1 by the
/// cyclotomic factors of the proper divisors of n. Memoized.
IntPolynomial cyclotomic(std::uint64_t n);

/// Rows 0..max_row of the Gaussian binomial triangle reduced modulo q^n - 1
/// (n >= 1). Entry [m][k] equals fold_cyclic(q_binomial(m, k), n).
std::vector<std::vector<IntPolynomial>> q_binomial_rows_cyclic(std::uint64_t max_row, std::uint64_t n);

}  // namespace mtc
