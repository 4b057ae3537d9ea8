// Open conjectures on W_n, w_n^(h)(x) and S_n^(h)(x). A counterexample here
// is a finding, reported with its witness.

#include "claim_impl.hpp"

#include "mtc/families.hpp"
#include "mtc/modular.hpp"

namespace mtc {

using detail::check_congruent;
using detail::check_equal;
using detail::params;
using detail::PointResult;
using detail::PreparedClaim;

namespace {

Integer s(std::int64_t v) { return Integer(static_cast<long>(v)); }

PreparedClaim build_W_recurrence(const ParamRange& range) {
  const auto W = sequence_table(Sequence::MotzkinAnalogW, range.n_max + 3);
  PreparedClaim pc;
  for (std::uint64_t n = 0; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [W](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i);
    const auto& w = *W;
    const Integer lhs = s(n + 3) * w[n + 3];
    const Integer rhs = s(3 * n + 7) * w[n + 2] + s(n - 5) * w[n + 1] - s(3 * (n + 1)) * w[n];
    PointResult r = check_equal(lhs, rhs);
    if (r.ok) r.table_value = to_string(w[n]);
    return r;
  };
  return pc;
}

PreparedClaim build_W_mod_2n(const ParamRange& range) {
  const auto W = sequence_table(Sequence::MotzkinAnalogW, range.n_max);
  auto sums = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t n = 1; n <= range.n_max; ++n) {
    const auto k = detail::as_i64(n - 1);
    (*sums)[n] = (*sums)[n - 1] + s(8 * k + 9) * (*W)[n - 1] * (*W)[n - 1];
  }
  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [sums](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    return check_congruent((*sums)[n], s(n), s(2 * n));
  };
  return pc;
}

// Prefix sums sum_{k=0}^{m} f(k) W_k^2 for m = 0..top.
std::shared_ptr<std::vector<Integer>> W_square_sums(std::uint64_t top, std::int64_t a, std::int64_t b) {
  const auto W = sequence_table(Sequence::MotzkinAnalogW, top);
  auto sums = std::make_shared<std::vector<Integer>>(top + 1);
  Integer acc = 0;
  for (std::uint64_t k = 0; k <= top; ++k) {
    acc += s(a * detail::as_i64(k) + b) * (*W)[k] * (*W)[k];
    (*sums)[k] = acc;
  }
  return sums;
}

PreparedClaim build_W_supercongruence(const ParamRange& range) {
  PreparedClaim pc;
  const auto primes = detail::claim_primes(range, 3, true, pc.skipped);
  const auto sums = W_square_sums(primes.empty() ? 0 : primes.back(), 8, 9);
  for (auto p : primes) pc.points.push_back(params({{"p", detail::as_i64(p)}}));
  pc.evaluate = [sums, primes](std::size_t i) {
    const std::uint64_t p = primes[i];
    const Integer pz(static_cast<unsigned long>(p));
    const Integer& sum = (*sums)[p - 1];
    if (!divides(pz, sum)) return PointResult::fail(to_string(sum), to_string(pz), "p does not divide the sum");
    const Integer lhs = sum / pz;
    const Integer rhs = 24 + 10 * legendre(Integer(-1), p) - 9 * legendre(Integer(static_cast<unsigned long>(p % 3)), 3) -
                        18 * legendre(Integer(3), p);
    PointResult r = check_congruent(lhs, rhs, pz * pz);
    if (!r.ok) r.detail += mod(lhs - rhs, pz) == 0 ? "; congruent modulo p" : "; not congruent modulo p";
    return r;
  };
  return pc;
}

PreparedClaim build_W_square_mod_p(const ParamRange& range) {
  PreparedClaim pc;
  const auto primes = detail::claim_primes(range, 5, true, pc.skipped);
  const auto sums = W_square_sums(primes.empty() ? 0 : primes.back(), 0, 1);
  for (auto p : primes) pc.points.push_back(params({{"p", detail::as_i64(p)}}));
  pc.evaluate = [sums, primes](std::size_t i) {
    const std::uint64_t p = primes[i];
    return check_congruent((*sums)[p - 1], Integer(2), Integer(static_cast<unsigned long>(p)));
  };
  return pc;
}

// Point of an integrality conjecture: form, h, m, n.
struct FormPoint {
  std::string form;
  std::uint64_t h, m, n;
};

// Sums sum_{k=1}^n sign(k) k(k+1)(2k+1) base(h, k)^m for all n <= n_max,
// keyed by (signed, h, m).
class WeightedPowerSums {
 public:
  using Base = std::function<IntPolynomial(std::int64_t k, std::int64_t h)>;

  WeightedPowerSums(std::uint64_t n_max, std::uint64_t h_max, std::uint64_t m_max, const Base& base)
      : h_max_(h_max), m_max_(m_max), sums_(2 * h_max * m_max) {
    for (std::uint64_t h = 1; h <= h_max; ++h) {
      for (std::uint64_t m = 1; m <= m_max; ++m) {
        sums_[slot(false, h, m)].resize(n_max + 1);
        sums_[slot(true, h, m)].resize(n_max + 1);
      }
      for (std::uint64_t k = 1; k <= n_max; ++k) {
        const auto sk = detail::as_i64(k);
        const IntPolynomial b = base(sk, detail::as_i64(h));
        IntPolynomial power(Integer(1));
        const Integer weight = s(sk * (sk + 1) * (2 * sk + 1));
        for (std::uint64_t m = 1; m <= m_max; ++m) {
          power = power * b;
          const IntPolynomial term = weight * power;
          auto& p = sums_[slot(false, h, m)];
          auto& a = sums_[slot(true, h, m)];
          p[k] = p[k - 1] + term;
          a[k] = k % 2 == 0 ? a[k - 1] + term : a[k - 1] - term;
        }
      }
    }
  }

  const IntPolynomial& sum(bool alternating, std::uint64_t h, std::uint64_t m, std::uint64_t n) const {
    return sums_[slot(alternating, h, m)][n];
  }

 private:
  std::size_t slot(bool alternating, std::uint64_t h, std::uint64_t m) const {
    return ((alternating ? 1 : 0) * h_max_ + (h - 1)) * m_max_ + (m - 1);
  }

  std::uint64_t h_max_, m_max_;
  std::vector<std::vector<IntPolynomial>> sums_;
};

// prefactor * sum, formed over Q; every coefficient must be an integer.
PointResult check_integral_quotient(const IntPolynomial& sum, const Rational& prefactor) {
  const RationalPolynomial quotient = to_rational(sum) * prefactor;
  if (to_integer(quotient)) return PointResult::pass();
  std::string bad;
  const auto& c = quotient.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_integral(c[i])) {
      bad = "coefficient of x^" + std::to_string(i) + " is " + to_string(c[i]);
      break;
    }
  }
  return PointResult::fail(render(quotient, 'x'), "an element of Z[x]", bad);
}

void require_hm(const ParamRange& range) {
  detail::require(range.h_max >= 1 && range.m_max >= 1, "h_max and m_max must be at least 1");
}

Integer gcd2n(std::uint64_t n) { return Integer(n % 2 == 0 ? 2 : 1); }

ParamTuple form_params(const FormPoint& p) {
  return {{"form", p.form}, {"h", detail::as_i64(p.h)}, {"m", detail::as_i64(p.m)}, {"n", detail::as_i64(p.n)}};
}

PreparedClaim build_w_power_conjectures(const ParamRange& range) {
  require_hm(range);
  auto sums = std::make_shared<WeightedPowerSums>(range.n_max, range.h_max, range.m_max,
                                                  [](std::int64_t k, std::int64_t h) { return w_poly(k, h); });
  auto pts = std::make_shared<std::vector<FormPoint>>();
  for (std::uint64_t h = 1; h <= range.h_max; ++h)
    for (std::uint64_t m = 1; m <= range.m_max; ++m)
      for (std::uint64_t n = 1; n <= range.n_max; ++n) pts->push_back({"a", h, m, n});
  for (std::uint64_t m = 1; m <= range.m_max; ++m)
    for (std::uint64_t n = 1; n <= range.n_max; ++n) pts->push_back({"b", 1, m, n});
  for (std::uint64_t h = 2; h <= range.h_max; ++h)
    for (std::uint64_t m = 1; m <= range.m_max; ++m)
      for (std::uint64_t n = 1; n <= range.n_max; ++n) pts->push_back({"c", h, m, n});
  PreparedClaim pc;
  for (const auto& p : *pts) pc.points.push_back(form_params(p));
  pc.evaluate = [sums, pts](std::size_t i) {
    const FormPoint& p = (*pts)[i];
    const Integer denom(static_cast<unsigned long>(p.n * (p.n + 1) * (p.n + 2)));
    const bool alternating = p.form != "a";
    const Integer numer = p.form == "c" ? Integer(1) : gcd2n(p.n);
    return check_integral_quotient(sums->sum(alternating, p.h, p.m, p.n), make_rational(numer, denom));
  };
  return pc;
}

PreparedClaim build_S_power_conjectures(const ParamRange& range) {
  require_hm(range);
  auto sums = std::make_shared<WeightedPowerSums>(range.n_max, range.h_max, range.m_max,
                                                  [](std::int64_t k, std::int64_t h) { return big_schroder_poly(k, h); });
  auto pts = std::make_shared<std::vector<FormPoint>>();
  for (const char* form : {"a", "b"})
    for (std::uint64_t h = 1; h <= range.h_max; ++h)
      for (std::uint64_t m = 1; m <= range.m_max; ++m)
        for (std::uint64_t n = 1; n <= range.n_max; ++n) pts->push_back({form, h, m, n});
  PreparedClaim pc;
  for (const auto& p : *pts) pc.points.push_back(form_params(p));
  const SignedPrefactor prefactor = range.signed_prefactor;
  pc.notes.push_back("signed form prefactor: " + to_string(prefactor));
  pc.evaluate = [sums, pts, prefactor](std::size_t i) {
    const FormPoint& p = (*pts)[i];
    const Integer denom(static_cast<unsigned long>(p.n * (p.n + 1) * (p.n + 2)));
    const Integer nz(static_cast<unsigned long>(p.n));
    Integer numer;
    if (p.form == "a") {
      numer = gcd2n(p.n);
    } else if (prefactor == SignedPrefactor::Gcd2MMinus1N) {
      numer = gcd(gcd(Integer(2), Integer(static_cast<unsigned long>(p.m - 1))), nz);
    } else {
      numer = gcd(pow(Integer(2), static_cast<unsigned long>(p.m - 1)), nz);
    }
    return check_integral_quotient(sums->sum(p.form == "b", p.h, p.m, p.n), make_rational(numer, denom));
  };
  return pc;
}

ParamRange hm_range(bool deep) {
  ParamRange r = detail::n_range(deep ? 60 : 40);
  r.h_max = deep ? 4 : 3;
  r.m_max = deep ? 4 : 3;
  return r;
}

}  // namespace

namespace detail {

void register_conjecture_claims(Registry& r) {
  r.push_back({{"REC-W", StatementKind::Identity, ClaimGroup::Identity, "(n)",
                "(n+3) W_{n+3} = (3n+7) W_{n+2} + (n-5) W_{n+1} - 3(n+1) W_n"},
               [](bool deep) { return n_range(deep ? 2000 : 500); }, build_W_recurrence});
  r.push_back({{"CONJ-5.1.a", StatementKind::Congruence, ClaimGroup::Conjecture, "(n)",
                "sum_{k=0}^{n-1} (8k+9) W_k^2 = n (mod 2n)"},
               [](bool deep) { return n_range(deep ? 5000 : 2000); }, build_W_mod_2n});
  r.push_back({{"CONJ-5.1.b", StatementKind::Congruence, ClaimGroup::Conjecture, "(p)",
                "p divides sum_{k=0}^{p-1} (8k+9) W_k^2, and the quotient = 24 + 10(-1/p) - 9(p/3) - 18(3/p) "
                "(mod p^2), odd primes p"},
               [](bool deep) { return prime_range(deep ? 1000 : 500); }, build_W_supercongruence});
  r.push_back({{"REM-5.1", StatementKind::Congruence, ClaimGroup::Conjecture, "(p)",
                "sum_{k=0}^{p-1} W_k^2 = 2 (mod p), primes p > 3"},
               [](bool deep) { return prime_range(deep ? 1000 : 500); }, build_W_square_mod_p});
  r.push_back({{"CONJ-5.2.abc", StatementKind::Integrality, ClaimGroup::Conjecture, "(form, h, m, n)",
                "a: gcd(2,n)/(n(n+1)(n+2)) sum_{k=1}^n k(k+1)(2k+1) w_k^(h)(x)^m in Z[x]; "
                "b: gcd(2,n)/(n(n+1)(n+2)) sum_{k=1}^n (-1)^k k(k+1)(2k+1) w_k(x)^m in Z[x]; "
                "c: 1/(n(n+1)(n+2)) sum_{k=1}^n (-1)^k k(k+1)(2k+1) w_k^(h)(x)^m in Z[x], h > 1"},
               hm_range, build_w_power_conjectures});
  r.push_back({{"CONJ-5.3.ab", StatementKind::Integrality, ClaimGroup::Conjecture, "(form, h, m, n)",
                "a: gcd(2,n)/(n(n+1)(n+2)) sum_{k=1}^n k(k+1)(2k+1) S_k^(h)(x)^m in Z[x]; "
                "b: g/(n(n+1)(n+2)) sum_{k=1}^n (-1)^k k(k+1)(2k+1) S_k^(h)(x)^m in Z[x], "
                "g = gcd(2,m-1,n) or gcd(2^(m-1),n)"},
               hm_range, build_S_power_conjectures});
}

}  // namespace detail

}  // namespace mtc
