#pragma once

// Exact integer sequences: binomials, Catalan/Narayana numbers, Motzkin and
// central trinomial numbers (plain and generalized), Delannoy and Schröder
// numbers, the w(n,k) coefficients and the W_n Motzkin analogue.
//
// Every function is pure. Table accessors go through a process-wide memo
// keyed by (sequence, b, c); the memo never changes a result.

#include "mtc/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mtc {

/// Parameters (b, c) of T_n(b,c) and M_n(b,c). The discriminant d = b^2 - 4c
/// is always derived, never stored.
class TrinomialParams {
 public:
  constexpr TrinomialParams(std::int64_t b, std::int64_t c) noexcept : b_(b), c_(c) {}

  constexpr std::int64_t b() const noexcept { return b_; }
  constexpr std::int64_t c() const noexcept { return c_; }
  Integer d() const { return Integer(b_) * b_ - Integer(4) * c_; }

  friend constexpr bool operator==(const TrinomialParams&, const TrinomialParams&) = default;

 private:
  std::int64_t b_;
  std::int64_t c_;
};

/// Generalized binomial coefficient prod_{j<k}(n-j)/k! for any integer n, k >= 0.
Integer binomial(const Integer& n, std::int64_t k);
Integer binomial(std::int64_t n, std::int64_t k);

Integer factorial(std::uint64_t n);

Integer catalan(std::uint64_t k);
/// N(m,k) = C(m,k) C(m,k-1) / m, for m >= k >= 1.
Integer narayana(std::int64_t m, std::int64_t k);

Integer motzkin(std::uint64_t n);
Integer central_trinomial(std::uint64_t n);
Integer gen_trinomial(std::uint64_t n, TrinomialParams p);
Integer gen_motzkin(std::uint64_t n, TrinomialParams p);
Integer delannoy(std::uint64_t n);
/// Little Schröder number s_n, defined for n >= 1 only.
Integer schroder_little(std::int64_t n);
Integer schroder_large(std::uint64_t n);
/// w(n,k) = C(n-1,k-1) C(n+k,k-1) / k, for n >= k >= 1.
Integer w_coeff(std::int64_t n, std::int64_t k);
/// W_n = sum_k C(n,2k) C(2k,k)/(2k-1).
Integer motzkin_analog_W(std::uint64_t n);

enum class Sequence {
  Motzkin,
  CentralTrinomial,
  GenTrinomial,
  GenMotzkin,
  Delannoy,
  SchroderLittle,
  SchroderLarge,
  Catalan,
  MotzkinAnalogW,
};

std::string to_string(Sequence s);

/// Values for indices 0..n_max. SchroderLittle has index 0 filled with 0
/// as a placeholder (s_0 does not exist). The (b, c) pair is used only by the
/// generalized sequences.
std::shared_ptr<const std::vector<Integer>> sequence_table(Sequence s, std::size_t n_max,
                                                           TrinomialParams p = {1, 1});

/// Drops all memoized tables. Used by tests to compare cached and fresh runs.
void clear_sequence_cache();

/// Pascal triangle for 0 <= k <= n <= n_max, for tight loops over ordinary
/// binomials. Lookups outside 0 <= k <= n return 0.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t n_max);

  const Integer& operator()(std::int64_t n, std::int64_t k) const;
  std::size_t n_max() const noexcept { return rows_.size() - 1; }

 private:
  std::vector<std::vector<Integer>> rows_;
  Integer zero_;
};

}  // namespace mtc
