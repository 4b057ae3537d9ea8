#pragma once

// Executable claims: every identity, divisibility, congruence and conjecture
// of the Motzkin / central trinomial family, checked exactly over a range of
// parameters and summarized in a VerificationReport.

#include "mtc/integer.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mtc {

enum class StatementKind {
  Identity,
  Divisibility,
  Congruence,
  Integrality,
  PolynomialIdentity,
  PolynomialDivisibility,
};

enum class ClaimGroup { Theorem, Lemma, Identity, Conjecture, Mutation };

std::string to_string(StatementKind k);
std::string to_string(ClaimGroup g);

/// Which prefactor the alternating S^(h) conjecture uses: gcd(2, m-1, n)
/// (default) or gcd(2^(m-1), n).
enum class SignedPrefactor { Gcd2MMinus1N, GcdPow2MMinus1N };

std::string to_string(SignedPrefactor p);
SignedPrefactor signed_prefactor_from_string(std::string_view s);

struct ParamRange {
  std::uint64_t n_max = 0;
  std::uint64_t prime_lo = 2;
  std::uint64_t prime_hi = 0;
  std::vector<std::int64_t> b_set;
  std::vector<std::int64_t> c_set;
  std::uint64_t h_max = 0;
  std::uint64_t m_max = 0;
  std::uint64_t qexp_a_max = 0;
  std::uint64_t qexp_b_max = 0;
  SignedPrefactor signed_prefactor = SignedPrefactor::Gcd2MMinus1N;

  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

/// Partial ParamRange used for command-line overrides.
struct RangeOverrides {
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> prime_hi;
  std::optional<std::vector<std::int64_t>> b_set;
  std::optional<std::vector<std::int64_t>> c_set;
  std::optional<std::uint64_t> h_max;
  std::optional<std::uint64_t> m_max;
  std::optional<std::uint64_t> qexp_a_max;
  std::optional<std::uint64_t> qexp_b_max;
  std::optional<SignedPrefactor> signed_prefactor;

  ParamRange apply(ParamRange base) const;
};

using ParamValue = std::variant<std::int64_t, std::string>;
using ParamTuple = std::vector<std::pair<std::string, ParamValue>>;

std::string to_string(const ParamTuple& t);

struct Counterexample {
  ParamTuple params;
  std::string lhs;
  std::string rhs;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SkippedPoint {
  ParamTuple params;
  std::string reason;

  friend bool operator==(const SkippedPoint&, const SkippedPoint&) = default;
};

struct TableRow {
  ParamTuple params;
  std::string value;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class Status { Verified, Counterexample, Skipped };

std::string to_string(Status s);
Status status_from_string(std::string_view s);

struct VerificationReport {
  std::string claim;
  ParamRange range;
  Status status = Status::Skipped;
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<SkippedPoint> skipped;
  std::vector<TableRow> table;
  std::vector<std::string> notes;
  std::chrono::microseconds elapsed{0};

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct ClaimInfo {
  std::string id;
  StatementKind kind;
  ClaimGroup group;
  std::string signature;  // parameter names, e.g. "(b, c, n)"
  std::string statement;  // the checked statement in plain notation
};

class UnknownClaim : public std::invalid_argument {
 public:
  explicit UnknownClaim(const std::string& id) : std::invalid_argument("unknown claim: " + id) {}
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite: " + name) {}
};

class InvalidRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All registered claims in registry order (mutation fixtures last).
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(std::string_view id);

/// Default range for a claim; `deep` widens it for long runs.
ParamRange default_range(std::string_view id, bool deep = false);

struct RunOptions {
  unsigned jobs = 1;
  bool stop_on_first = false;
};

VerificationReport verify_claim(std::string_view id, const ParamRange& range, const RunOptions& options = {});

/// Congruence family: THM-1.1.ii, LEM-2.4, EQ-2.11, CONJ-5.1.a, CONJ-5.1.b,
/// REM-5.1, LEM-3.4, LEM-4.3.
std::vector<VerificationReport> verify_congruence_claims(const std::vector<std::string>& ids, const ParamRange& range,
                                                         const RunOptions& options = {});

/// Polynomial family: ID-2.3, LEM-2.1.a, LEM-4.5, LEM-4.6, REC-w, EQ-4.13,
/// CONJ-5.2.abc, CONJ-5.3.ab, LEM-2.3.
std::vector<VerificationReport> verify_polynomial_claims(const std::vector<std::string>& ids, const ParamRange& range,
                                                         const RunOptions& options = {});

/// M_n(b,c) = sqrt(d)^n s_{n+1}((b/sqrt(d) - 1)/2) over the (b, c) grid.
VerificationReport verify_sqrt_d_claims(const ParamRange& range, const RunOptions& options = {});

/// Suite names: theorems, lemmas, identities, conjectures, all.
const std::vector<std::string>& suite_names();
std::vector<std::string> suite_claims(std::string_view suite);

/// Runs a suite with per-claim defaults, then overrides. With stop_on_first the
/// suite stops after the first claim that has a counterexample.
std::vector<VerificationReport> run_suite(std::string_view suite, const RangeOverrides& overrides,
                                          const RunOptions& options = {}, bool deep = false);

/// Conjunction of the report statuses: Counterexample if any, Verified if all
/// verified, Skipped otherwise.
Status overall_status(const std::vector<VerificationReport>& reports);

/// s(n) = (2/n) sum_{k=1}^n (2k+1) M_k^2, n >= 1. Throws NonIntegral.
Integer s_quotient(std::int64_t n);
/// t(n) = 6/(n^2(n^2-1)) sum_{k=0}^{n-1} k(k+1)(8k+9) T_k T_{k+1}, n >= 2.
Integer t_quotient(std::int64_t n);

}  // namespace mtc
