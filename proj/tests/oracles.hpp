#pragma once

// Test-only reference implementations. Each one takes a different route from
// the library: lattice-path dynamic programs, coefficient extraction from
// explicit polynomial powers, box-partition counts and brute-force search.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

// Rows 0..n_max of Pascal's triangle, built additively.
inline std::vector<std::vector<Z>> pascal(std::int64_t n_max) {
  std::vector<std::vector<Z>> rows{{1}};
  for (std::int64_t i = 1; i <= n_max; ++i) {
    const auto& row = rows.back();
    std::vector<Z> next(static_cast<std::size_t>(i + 1));
    next[0] = 1;
    next[static_cast<std::size_t>(i)] = 1;
    for (std::size_t j = 1; j < static_cast<std::size_t>(i); ++j) next[j] = row[j - 1] + row[j];
    rows.push_back(std::move(next));
  }
  return rows;
}

inline Z binomial(std::int64_t n, std::int64_t k) {
  static const auto rows = pascal(700);
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 700) return pascal(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Walks of n steps on heights >= 0 ending at 0. Step weights: flat `flat`,
// each down step `down` (so each up/down pair carries `down`).
inline Z weighted_motzkin_paths(std::int64_t n, const Z& flat, const Z& down) {
  std::vector<Z> h(static_cast<std::size_t>(n + 2));
  h[0] = 1;
  for (std::int64_t s = 0; s < n; ++s) {
    std::vector<Z> next(h.size());
    for (std::size_t y = 0; y + 1 < h.size(); ++y) {
      if (h[y] == 0) continue;
      next[y] += h[y] * flat;
      next[y + 1] += h[y];
      if (y > 0) next[y - 1] += h[y] * down;
    }
    h = std::move(next);
  }
  return h[0];
}

inline Z motzkin(std::int64_t n) { return weighted_motzkin_paths(n, 1, 1); }

// M_0..M_n_max from one run of the walk: entry s is the return count after s steps.
inline std::vector<Z> motzkin_prefix(std::int64_t n_max) {
  std::vector<Z> h(static_cast<std::size_t>(n_max + 2)), out{1};
  h[0] = 1;
  for (std::int64_t s = 0; s < n_max; ++s) {
    std::vector<Z> next(h.size());
    for (std::size_t y = 0; y + 1 < h.size(); ++y) {
      next[y] += h[y];
      next[y + 1] += h[y];
      if (y > 0) next[y - 1] += h[y];
    }
    h = std::move(next);
    out.push_back(h[0]);
  }
  return out;
}
inline Z gen_motzkin(std::int64_t n, std::int64_t b, std::int64_t c) {
  return weighted_motzkin_paths(n, Z(static_cast<long>(b)), Z(static_cast<long>(c)));
}

// Coefficient of x^n in (x^2 + b x + c)^n by repeated convolution.
inline Z gen_trinomial(std::int64_t n, std::int64_t b, std::int64_t c) {
  std::vector<Z> p{1};
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<Z> next(p.size() + 2);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] += p[j] * c;
      next[j + 1] += p[j] * b;
      next[j + 2] += p[j];
    }
    p = std::move(next);
  }
  return p[static_cast<std::size_t>(n)];
}

inline Z central_trinomial(std::int64_t n) { return gen_trinomial(n, 1, 1); }

// Dyck paths of semilength n.
inline Z catalan(std::int64_t n) { return weighted_motzkin_paths(2 * n, 0, 1); }

// Dyck paths of semilength m with exactly k peaks.
inline Z narayana(std::int64_t m, std::int64_t k) {
  // state: (height, peaks, last step was up)
  std::map<std::tuple<std::int64_t, std::int64_t, bool>, Z> cur{{{0, 0, false}, 1}};
  for (std::int64_t s = 0; s < 2 * m; ++s) {
    std::map<std::tuple<std::int64_t, std::int64_t, bool>, Z> next;
    for (const auto& [key, count] : cur) {
      const auto [y, peaks, up] = key;
      next[{y + 1, peaks, true}] += count;
      if (y > 0) next[{y - 1, peaks + (up ? 1 : 0), false}] += count;
    }
    cur = std::move(next);
  }
  Z total = 0;
  for (const auto& [key, count] : cur)
    if (std::get<0>(key) == 0 && std::get<1>(key) == k) total += count;
  return total;
}

// Lattice paths (0,0) -> (n,n) with steps E, N, NE.
inline Z delannoy(std::int64_t n) {
  const auto m = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<Z>> d(m, std::vector<Z>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == 0 || j == 0) {
        d[i][j] = 1;
        continue;
      }
      d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
    }
  }
  return d[m - 1][m - 1];
}

// Paths (0,0) -> (2n,0) with steps (1,1), (1,-1), (2,0) never below the axis.
inline Z schroder_large(std::int64_t n) {
  const auto len = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::vector<Z>> f(len, std::vector<Z>(len + 1));
  f[0][0] = 1;
  for (std::size_t x = 0; x < len; ++x) {
    for (std::size_t y = 0; y < len; ++y) {
      if (f[x][y] == 0) continue;
      if (x + 1 < len) {
        f[x + 1][y + 1] += f[x][y];
        if (y > 0) f[x + 1][y - 1] += f[x][y];
      }
      if (x + 2 < len) f[x + 2][y] += f[x][y];
    }
  }
  return f[len - 1][0];
}

// W_n = sum_k C(n,2k) C(2k,k) / (2k-1) over the rationals.
inline Z motzkin_analog_W(std::int64_t n) {
  Q sum = 0;
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    Q term(binomial(n, 2 * k) * binomial(2 * k, k), Z(static_cast<long>(2 * k - 1)));
    term.canonicalize();
    sum += term;
  }
  return Z(sum);
}

// Partitions fitting inside a k x (n-k) box, counted by size: the coefficient
// list of the Gaussian binomial [n, k]_q.
inline std::vector<Z> q_binomial_coeffs(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return {};
  if (k == 0) return {1};
  const std::int64_t w = n - k;
  std::vector<Z> counts(static_cast<std::size_t>(k * w + 1));
  // dp[last][sum]: sequences w >= a_1 >= ... >= a_i = last, by sum.
  std::vector<std::vector<Z>> dp(static_cast<std::size_t>(w + 1), std::vector<Z>(counts.size()));
  for (std::int64_t a = 0; a <= w; ++a) dp[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
  for (std::int64_t i = 1; i < k; ++i) {
    std::vector<std::vector<Z>> next(dp.size(), std::vector<Z>(counts.size()));
    for (std::int64_t last = 0; last <= w; ++last) {
      for (std::size_t s = 0; s < counts.size(); ++s) {
        const Z& v = dp[static_cast<std::size_t>(last)][s];
        if (v == 0) continue;
        for (std::int64_t a = 0; a <= last && s + static_cast<std::size_t>(a) < counts.size(); ++a)
          next[static_cast<std::size_t>(a)][s + static_cast<std::size_t>(a)] += v;
      }
    }
    dp = std::move(next);
  }
  for (const auto& row : dp)
    for (std::size_t s = 0; s < counts.size(); ++s) counts[s] += row[s];
  return counts;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Legendre symbol by listing the squares modulo p.
inline int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if ((x * x) % p == r) return 1;
  return -1;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  const std::int64_t r = ((a % m) + m) % m;
  for (std::int64_t b = 0; b < m; ++b)
    if ((r * b) % m == 1 % m) return b;
  return -1;
}

inline Z ipow(const Z& base, unsigned long e) {
  Z r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

// Coefficients of s_n(x) = sum_k N(n,k) x^(k-1) (x+1)^(n-k), expanded by hand.
inline std::vector<Z> s_poly_coeffs(std::int64_t n) {
  std::vector<Z> out(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    const Z nk = narayana(n, k);
    for (std::int64_t j = 0; j <= n - k; ++j) out[static_cast<std::size_t>(k - 1 + j)] += nk * binomial(n - k, j);
  }
  return out;
}

}  // namespace oracle
