#pragma once

// Primes, Legendre symbols, modular inverses and Fermat quotients.

#include "mtc/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mtc {

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(const Integer& a, const Integer& m);
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Closed interval [lo, hi] of candidate primes, lo >= 2, hi >= lo.
class PrimeRange {
 public:
  PrimeRange(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }

 private:
  std::uint64_t lo_;
  std::uint64_t hi_;
};

/// Primes in the range, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_in(const PrimeRange& r);

/// Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p, via Euler's criterion.
int legendre(const Integer& a, std::uint64_t p);

/// b in [0, m) with a*b = 1 (mod m).
Integer mod_inverse(const Integer& a, const Integer& m);

enum class FermatRoute { Exact, ModPrimeSquare };

/// ((a^(p-1) - 1) / p) mod p, for prime p not dividing a.
Integer fermat_quotient(const Integer& a, std::uint64_t p, FermatRoute route = FermatRoute::Exact);

}  // namespace mtc
