#include "mtc/modular.hpp"

#include <array>
#include <string>

namespace mtc {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

void require_odd_prime(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

NotInvertible::NotInvertible(const Integer& a, const Integer& m)
    : std::domain_error(to_string(a) + " is not invertible modulo " + to_string(m)) {}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeRange::PrimeRange(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {
  if (lo < 2) throw std::invalid_argument("PrimeRange: lo must be >= 2");
  if (hi < lo) throw std::invalid_argument("PrimeRange: hi must be >= lo");
}

std::vector<std::uint64_t> primes_in(const PrimeRange& r) {
  std::vector<bool> composite(r.hi() + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= r.hi(); ++i) {
    if (composite[i]) continue;
    if (i >= r.lo()) out.push_back(i);
    for (std::uint64_t j = i * i; j <= r.hi(); j += i) composite[j] = true;
  }
  return out;
}

int legendre(const Integer& a, std::uint64_t p) {
  require_odd_prime(p);
  const Integer pz(static_cast<unsigned long>(p));
  const Integer residue = mod(a, pz);
  if (residue == 0) return 0;
  Integer e;
  mpz_powm_ui(e.get_mpz_t(), residue.get_mpz_t(), (p - 1) / 2, pz.get_mpz_t());
  return e == 1 ? 1 : -1;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) {
    // Every integer is congruent to 0 mod 1, and 0 * 0 = 0 = 1 (mod 1).
    return 0;
  }
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw NotInvertible(a, m);
  return mod(inv, m);
}

Integer fermat_quotient(const Integer& a, std::uint64_t p, FermatRoute route) {
  if (!is_prime(p)) throw std::invalid_argument("fermat_quotient: p must be prime");
  const Integer pz(static_cast<unsigned long>(p));
  if (divides(pz, a)) throw std::invalid_argument("fermat_quotient: p divides a");
  if (route == FermatRoute::Exact) {
    const Integer q = exact_quotient(pow(a, p - 1) - 1, pz);
    return mod(q, pz);
  }
  const Integer p2 = pz * pz;
  Integer r;
  const Integer base = mod(a, p2);
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), p - 1, p2.get_mpz_t());
  return mod(exact_quotient(r - 1, pz), pz);
}

}  // namespace mtc
