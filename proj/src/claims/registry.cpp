#include "claim_impl.hpp"

#include "mtc/modular.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mtc {

namespace detail {

namespace {

constexpr std::array kCanonicalOrder{
    "THM-1.1.i",   "THM-1.1.ii",  "THM-1.2",     "THM-1.3.a",   "THM-1.3.b",     "THM-1.3.c",
    "THM-1.3.d",   "ID-1.8",      "COR-1.1.ab",  "COR-1.1.c",   "COR-1.1.d",     "ID-2.3",
    "LEM-2.1.a",   "LEM-2.1.b",   "REM-2.1",     "LEM-2.2",     "EQ-2.8",        "LEM-2.3",
    "LEM-2.4",     "EQ-2.11",     "LEM-3.1.a",   "LEM-3.1.b",   "LEM-3.2",       "EQ-3.partial",
    "EQ-3.4",      "LEM-3.3",     "LEM-3.4",     "LEM-4.1",     "EQ-4.2",        "LEM-4.2",
    "LEM-4.3",     "LEM-4.4.a",   "LEM-4.4.b",   "LEM-4.5",     "LEM-4.6",       "REC-w",
    "EQ-4.10",     "EQ-4.11",     "EQ-4.12",     "EQ-4.13",     "REC-W",         "CONJ-5.1.a",
    "CONJ-5.1.b",  "REM-5.1",     "CONJ-5.2.abc", "CONJ-5.3.ab", "MUT-THM-1.1.i", "MUT-THM-1.2",
    "MUT-ID-1.8",  "MUT-LEM-2.3",
};

Registry build_registry() {
  Registry r;
  register_theorem_claims(r);
  register_section2_claims(r);
  register_support_claims(r);
  register_polynomial_claims(r);
  register_conjecture_claims(r);
  register_mutation_claims(r);
  auto rank = [](const std::string& id) {
    auto it = std::find(kCanonicalOrder.begin(), kCanonicalOrder.end(), id);
    if (it == kCanonicalOrder.end()) throw std::logic_error("claim missing from canonical order: " + id);
    return it - kCanonicalOrder.begin();
  };
  std::sort(r.begin(), r.end(), [&](const auto& a, const auto& b) { return rank(a.info.id) < rank(b.info.id); });
  if (r.size() != kCanonicalOrder.size()) throw std::logic_error("claim registry is incomplete");
  return r;
}

}  // namespace

const Registry& definitions() {
  static const Registry registry = build_registry();
  return registry;
}

const ClaimDefinition& definition(std::string_view id) {
  for (const auto& d : definitions())
    if (d.info.id == id) return d;
  throw UnknownClaim(std::string(id));
}

std::vector<std::int64_t> default_b_set() { return {-4, -3, -2, -1, 1, 2, 3, 4}; }
std::vector<std::int64_t> default_c_set() { return {-4, -3, -2, -1, 0, 1, 2, 3, 4}; }

ParamRange n_range(std::uint64_t n_max) {
  ParamRange r;
  r.n_max = n_max;
  return r;
}

ParamRange grid_range(std::uint64_t n_max) {
  ParamRange r = n_range(n_max);
  r.b_set = default_b_set();
  r.c_set = default_c_set();
  return r;
}

ParamRange prime_range(std::uint64_t prime_hi) {
  ParamRange r;
  r.prime_hi = prime_hi;
  return r;
}

ParamTuple params(std::initializer_list<std::pair<const char*, std::int64_t>> values) {
  ParamTuple t;
  t.reserve(values.size());
  for (const auto& [name, v] : values) t.emplace_back(name, ParamValue{v});
  return t;
}

PointResult check_equal(const Integer& lhs, const Integer& rhs) {
  if (lhs == rhs) return PointResult::pass();
  return PointResult::fail(to_string(lhs), to_string(rhs), "difference " + to_string(Integer(lhs - rhs)));
}

PointResult check_equal(const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) return PointResult::pass();
  return PointResult::fail(to_string(lhs), to_string(rhs), "difference " + to_string(Rational(lhs - rhs)));
}

PointResult check_equal(const IntPolynomial& lhs, const IntPolynomial& rhs, char var) {
  if (lhs == rhs) return PointResult::pass();
  return PointResult::fail(render(lhs, var), render(rhs, var), "difference " + render(lhs - rhs, var));
}

PointResult check_divides(const Integer& divisor, const Integer& dividend) {
  if (divides(divisor, dividend)) return PointResult::pass();
  const Integer r = divisor == 0 ? dividend : Integer(dividend % divisor);
  return PointResult::fail(to_string(dividend), to_string(divisor), "remainder " + to_string(r));
}

PointResult check_congruent(const Integer& a, const Integer& b, const Integer& m) {
  const Integer ra = mod(a, m);
  const Integer rb = mod(b, m);
  if (ra == rb) return PointResult::pass();
  return PointResult::fail(to_string(ra), to_string(rb), "residues modulo " + to_string(m));
}

std::vector<TrinomialParams> grid_pairs(const ParamRange& range, GridConditions cond,
                                        std::vector<SkippedPoint>& skipped) {
  require(!range.b_set.empty() && !range.c_set.empty(), "the (b, c) grid is empty");
  std::vector<TrinomialParams> out;
  for (auto b : range.b_set) {
    for (auto c : range.c_set) {
      const TrinomialParams p{b, c};
      if (cond.b_nonzero && b == 0) {
        skipped.push_back({params({{"b", b}, {"c", c}}), "requires b != 0"});
      } else if (cond.d_nonzero && p.d() == 0) {
        skipped.push_back({params({{"b", b}, {"c", c}}), "requires d = b^2 - 4c != 0"});
      } else {
        out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> claim_primes(const ParamRange& range, std::uint64_t min_prime, bool odd_only,
                                        std::vector<SkippedPoint>& skipped) {
  if (range.prime_hi < range.prime_lo) return {};
  std::vector<std::uint64_t> out;
  for (auto p : primes_in(PrimeRange(range.prime_lo, range.prime_hi))) {
    if (p < min_prime || (odd_only && p == 2)) {
      skipped.push_back({params({{"p", as_i64(p)}}),
                         odd_only && p == 2 ? "requires an odd prime" : "requires p >= " + std::to_string(min_prime)});
      continue;
    }
    out.push_back(p);
  }
  return out;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidRange(message);
}

std::vector<Integer> power_table(const Integer& base, std::size_t count) {
  std::vector<Integer> out(count + 1);
  out[0] = 1;
  for (std::size_t i = 1; i <= count; ++i) out[i] = out[i - 1] * base;
  return out;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace detail

std::string to_string(StatementKind k) {
  switch (k) {
    case StatementKind::Identity: return "identity";
    case StatementKind::Divisibility: return "divisibility";
    case StatementKind::Congruence: return "congruence";
    case StatementKind::Integrality: return "integrality";
    case StatementKind::PolynomialIdentity: return "polynomial-identity";
    case StatementKind::PolynomialDivisibility: return "polynomial-divisibility";
  }
  return "?";
}

std::string to_string(ClaimGroup g) {
  switch (g) {
    case ClaimGroup::Theorem: return "theorem";
    case ClaimGroup::Lemma: return "lemma";
    case ClaimGroup::Identity: return "identity";
    case ClaimGroup::Conjecture: return "conjecture";
    case ClaimGroup::Mutation: return "mutation";
  }
  return "?";
}

std::string to_string(SignedPrefactor p) {
  return p == SignedPrefactor::Gcd2MMinus1N ? "gcd(2,m-1,n)" : "gcd(2^(m-1),n)";
}

SignedPrefactor signed_prefactor_from_string(std::string_view s) {
  if (s == "gcd" || s == "gcd(2,m-1,n)") return SignedPrefactor::Gcd2MMinus1N;
  if (s == "pow2" || s == "gcd(2^(m-1),n)") return SignedPrefactor::GcdPow2MMinus1N;
  throw std::invalid_argument("unknown prefactor interpretation: " + std::string(s));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Counterexample: return "counterexample";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "verified") return Status::Verified;
  if (s == "counterexample") return Status::Counterexample;
  if (s == "skipped") return Status::Skipped;
  throw std::invalid_argument("unknown status: " + std::string(s));
}

std::string to_string(const ParamTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ", ";
    out += t[i].first + "=";
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>)
            out += v;
          else
            out += std::to_string(v);
        },
        t[i].second);
  }
  return out + ")";
}

ParamRange RangeOverrides::apply(ParamRange base) const {
  if (n_max) base.n_max = *n_max;
  if (prime_hi) base.prime_hi = *prime_hi;
  if (b_set) base.b_set = *b_set;
  if (c_set) base.c_set = *c_set;
  if (h_max) base.h_max = *h_max;
  if (m_max) base.m_max = *m_max;
  if (qexp_a_max) base.qexp_a_max = *qexp_a_max;
  if (qexp_b_max) base.qexp_b_max = *qexp_b_max;
  if (signed_prefactor) base.signed_prefactor = *signed_prefactor;
  return base;
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& d : detail::definitions()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

const ClaimInfo& claim_info(std::string_view id) { return detail::definition(id).info; }

ParamRange default_range(std::string_view id, bool deep) { return detail::definition(id).defaults(deep); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorems", "lemmas", "identities", "conjectures", "all"};
  return names;
}

std::vector<std::string> suite_claims(std::string_view suite) {
  std::optional<ClaimGroup> group;
  if (suite == "theorems") group = ClaimGroup::Theorem;
  else if (suite == "lemmas") group = ClaimGroup::Lemma;
  else if (suite == "identities") group = ClaimGroup::Identity;
  else if (suite == "conjectures") group = ClaimGroup::Conjecture;
  else if (suite != "all") throw UnknownSuite(std::string(suite));
  std::vector<std::string> out;
  for (const auto& info : claim_registry()) {
    if (info.group == ClaimGroup::Mutation) continue;
    if (!group || info.group == *group) out.push_back(info.id);
  }
  return out;
}

}  // namespace mtc
