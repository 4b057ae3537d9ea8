#include "mtc/qpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mtc {

namespace {

using Row = std::vector<IntPolynomial>;

struct QBinomialRows {
  std::mutex mutex;
  std::vector<std::shared_ptr<const Row>> rows;
};

QBinomialRows& qbinomial_rows() {
  static QBinomialRows instance;
  return instance;
}

IntPolynomial shift(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Integer> v(k);
  v.insert(v.end(), p.coefficients().begin(), p.coefficients().end());
  return IntPolynomial(std::move(v));
}

std::shared_ptr<const Row> row(std::uint64_t n) {
  auto& cache = qbinomial_rows();
  std::lock_guard lock(cache.mutex);
  if (cache.rows.empty()) cache.rows.push_back(std::make_shared<const Row>(Row{IntPolynomial(Integer(1))}));
  while (cache.rows.size() <= n) {
    const Row& prev = *cache.rows.back();
    const std::size_t m = cache.rows.size();
    Row next(m + 1);
    next[0] = IntPolynomial(Integer(1));
    next[m] = IntPolynomial(Integer(1));
    for (std::size_t k = 1; k < m; ++k) next[k] = shift(prev[k], k) + prev[k - 1];
    cache.rows.push_back(std::make_shared<const Row>(std::move(next)));
  }
  return cache.rows[n];
}

struct CyclotomicCache {
  std::mutex mutex;
  std::map<std::uint64_t, IntPolynomial> table;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache instance;
  return instance;
}

}  // namespace

IntPolynomial q_integer(std::uint64_t n) {
  return IntPolynomial(std::vector<Integer>(n, Integer(1)));
}

IntPolynomial q_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return {};
  return (*row(n))[k];
}

std::vector<std::vector<IntPolynomial>> q_binomial_rows_cyclic(std::uint64_t max_row, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("q_binomial_rows_cyclic: n must be positive");
  // Work on length-n residue vectors; q^k acts as a rotation.
  using Residue = std::vector<Integer>;
  std::vector<Residue> prev{Residue(n)};
  prev[0][0] = 1;
  std::vector<std::vector<IntPolynomial>> out;
  out.push_back({IntPolynomial(Integer(1))});
  for (std::uint64_t m = 1; m <= max_row; ++m) {
    std::vector<Residue> next(m + 1, Residue(n));
    next[0][0] = 1;
    next[m][0] = 1;
    for (std::uint64_t k = 1; k < m; ++k) {
      const std::uint64_t shift = k % n;
      for (std::uint64_t i = 0; i < n; ++i) {
        next[k][(i + shift) % n] += prev[k][i];
        next[k][i] += prev[k - 1][i];
      }
    }
    std::vector<IntPolynomial> row_polys;
    row_polys.reserve(m + 1);
    for (const auto& r : next) row_polys.emplace_back(r);
    out.push_back(std::move(row_polys));
    prev = std::move(next);
  }
  return out;
}

IntPolynomial cyclotomic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  auto& cache = cyclotomic_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(n); it != cache.table.end()) return it->second;
  }
  IntPolynomial divisor(Integer(1));
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) divisor *= cyclotomic(d);
  IntPolynomial q_n_minus_1 = IntPolynomial::monomial(Integer(1), n) - IntPolynomial(Integer(1));
  IntPolynomial phi;
  try {
    phi = exact_div(q_n_minus_1, divisor);
  } catch (const NotDivisible& e) {
    throw std::logic_error("cyclotomic(" + std::to_string(n) + "): inexact division: " + e.what());
  }
  std::lock_guard lock(cache.mutex);
  cache.table.emplace(n, phi);
  return phi;
}

}  // namespace mtc
