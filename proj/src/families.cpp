#include "mtc/families.hpp"

#include "mtc/sequences.hpp"

#include <stdexcept>

namespace mtc {

IntPolynomial s_poly(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("s_poly: n must be positive");
  std::vector<Integer> coeffs(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    const Integer nar = narayana(n, k);
    // N(n,k) x^(k-1) (x+1)^(n-k), expanded binomially.
    for (std::int64_t i = 0; i <= n - k; ++i) coeffs[static_cast<std::size_t>(k - 1 + i)] += nar * binomial(n - k, i);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial big_schroder_poly(std::int64_t n, std::int64_t h) {
  if (n < 0) throw std::invalid_argument("big_schroder_poly: n must be non-negative");
  if (h < 1) throw std::invalid_argument("big_schroder_poly: h must be positive");
  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k)
    coeffs.push_back(pow(binomial(n + k, 2 * k) * catalan(static_cast<std::uint64_t>(k)), static_cast<unsigned long>(h)));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial big_schroder_poly_binomial_form(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("big_schroder_poly_binomial_form: n must be non-negative");
  std::vector<Integer> coeffs;
  for (std::int64_t k = 0; k <= n; ++k)
    coeffs.push_back(exact_quotient(binomial(n, k) * binomial(n + k, k), Integer(static_cast<long>(k + 1))));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial w_poly(std::int64_t n, std::int64_t h) {
  if (n < 1) throw std::invalid_argument("w_poly: n must be positive");
  if (h < 1) throw std::invalid_argument("w_poly: h must be positive");
  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) coeffs.push_back(pow(w_coeff(n, k), static_cast<unsigned long>(h)));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial x_times_x_plus_one() { return IntPolynomial(std::vector<Integer>{0, 1, 1}); }

}  // namespace mtc
