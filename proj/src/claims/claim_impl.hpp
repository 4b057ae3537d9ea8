#pragma once

// Internal plumbing shared by the claim definition files.

#include "mtc/claims.hpp"
#include "mtc/polynomial.hpp"
#include "mtc/sequences.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mtc::detail {

struct PointResult {
  bool ok = true;
  std::string lhs;
  std::string rhs;
  std::string detail;
  std::optional<std::string> table_value;

  static PointResult pass(std::optional<std::string> table_value = std::nullopt) {
    PointResult r;
    r.table_value = std::move(table_value);
    return r;
  }
  static PointResult fail(std::string lhs, std::string rhs, std::string detail = {}) {
    PointResult r;
    r.ok = false;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.detail = std::move(detail);
    return r;
  }
};

/// A claim bound to a concrete range: the parameter points in report order and
/// an evaluator that is safe to call concurrently for distinct indices.
struct PreparedClaim {
  std::vector<ParamTuple> points;
  std::vector<SkippedPoint> skipped;
  std::function<PointResult(std::size_t)> evaluate;
  std::vector<std::string> notes;
};

using ClaimBuilder = std::function<PreparedClaim(const ParamRange&)>;
using RangeDefaults = std::function<ParamRange(bool deep)>;

struct ClaimDefinition {
  ClaimInfo info;
  RangeDefaults defaults;
  ClaimBuilder build;
};

using Registry = std::vector<ClaimDefinition>;

void register_theorem_claims(Registry& r);
void register_section2_claims(Registry& r);
void register_support_claims(Registry& r);
void register_polynomial_claims(Registry& r);
void register_conjecture_claims(Registry& r);
void register_mutation_claims(Registry& r);

const Registry& definitions();
const ClaimDefinition& definition(std::string_view id);

// ---- default ranges ----------------------------------------------------

inline constexpr std::uint64_t kTheoremN = 200;
inline constexpr std::uint64_t kSupportN = 100;
inline constexpr std::uint64_t kPolynomialN = 50;
inline constexpr std::uint64_t kTriangleN = 60;
inline constexpr std::uint64_t kPrimeHi = 1000;

std::vector<std::int64_t> default_b_set();
std::vector<std::int64_t> default_c_set();

ParamRange n_range(std::uint64_t n_max);
ParamRange grid_range(std::uint64_t n_max);
ParamRange prime_range(std::uint64_t prime_hi);

// ---- parameter tuples ----------------------------------------------------

ParamTuple params(std::initializer_list<std::pair<const char*, std::int64_t>> values);

// ---- checks ----------------------------------------------------------------

PointResult check_equal(const Integer& lhs, const Integer& rhs);
PointResult check_equal(const Rational& lhs, const Rational& rhs);
PointResult check_equal(const IntPolynomial& lhs, const IntPolynomial& rhs, char var = 'x');
// Unevaluated gmp integer expressions are materialized before comparison.
template <class L, class R>
PointResult check_equal(const __gmp_expr<mpz_t, L>& lhs, const __gmp_expr<mpz_t, R>& rhs) {
  return check_equal(Integer(lhs), Integer(rhs));
}
/// divisor | dividend, reported as lhs = dividend, rhs = divisor.
PointResult check_divides(const Integer& divisor, const Integer& dividend);
/// a = b (mod m), m > 0.
PointResult check_congruent(const Integer& a, const Integer& b, const Integer& m);

// ---- (b, c) grids ----------------------------------------------------------

struct GridConditions {
  bool b_nonzero = false;
  bool d_nonzero = false;
};

/// Valid (b, c) pairs of the range in grid order; excluded pairs are appended
/// to `skipped` with the violated condition.
std::vector<TrinomialParams> grid_pairs(const ParamRange& range, GridConditions cond, std::vector<SkippedPoint>& skipped);

/// Valid primes of the range satisfying p >= min_prime; excluded primes go to
/// `skipped`.
std::vector<std::uint64_t> claim_primes(const ParamRange& range, std::uint64_t min_prime, bool odd_only,
                                        std::vector<SkippedPoint>& skipped);

void require(bool condition, const std::string& message);

/// Integer as a signed machine value for loop bounds.
inline std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

/// x^e with 0^0 = 1.
std::vector<Integer> power_table(const Integer& base, std::size_t count);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// ---- builders shared with the mutated fixtures -------------------------------

/// Summand weight as a function of k, e.g. 2k+1.
using Weight = std::function<Integer(std::uint64_t k)>;

/// n | 2 sum_{k=1}^n weight(k) M_k^2, with the quotient tabulated.
PreparedClaim build_s_integrality(const ParamRange& range, const Weight& weight);
/// n^2(n^2-1)/6 | sum_{k=0}^{n-1} weight(k) T_k T_{k+1}, quotient tabulated.
PreparedClaim build_t_divisibility(const ParamRange& range, const Weight& weight);
/// sum_{k<n} weight(k) M_k^2 3^(n-1-k) = n(n+1)(n+2) M_n M_{n-1}.
PreparedClaim build_motzkin_cubic_identity(const ParamRange& range, const Weight& weight);
/// [n]_q divides the q-sum with factor [k+shift]_q.
PreparedClaim build_q_divisibility(const ParamRange& range, std::uint64_t shift);

}  // namespace mtc::detail
