#include "doctest.h"
#include "mtc/claims.hpp"
#include "mtc/modular.hpp"
#include "mtc/sequences.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace mtc;

namespace {

ParamRange with_n(std::string_view id, std::uint64_t n_max) {
  ParamRange r = default_range(id);
  r.n_max = n_max;
  return r;
}

ParamRange with_primes(std::string_view id, std::uint64_t lo, std::uint64_t hi) {
  ParamRange r = default_range(id);
  r.prime_lo = lo;
  r.prime_hi = hi;
  return r;
}

VerificationReport strip_elapsed(VerificationReport r) {
  r.elapsed = std::chrono::microseconds{0};
  return r;
}

std::int64_t param(const ParamTuple& t, const std::string& name) {
  for (const auto& [k, v] : t)
    if (k == name) return std::get<std::int64_t>(v);
  FAIL("missing parameter " << name);
  return 0;
}

bool is_conjecture(const ClaimInfo& info) { return info.group == ClaimGroup::Conjecture; }

}  // namespace

TEST_CASE("registry is exhaustive and unique") {
  const std::vector<std::string> expected{
      "THM-1.1.i", "THM-1.1.ii", "THM-1.2",    "THM-1.3.a",    "THM-1.3.b",   "THM-1.3.c",    "THM-1.3.d",
      "ID-1.8",    "COR-1.1.ab", "COR-1.1.c",  "COR-1.1.d",    "ID-2.3",      "LEM-2.1.a",    "LEM-2.1.b",
      "REM-2.1",   "LEM-2.2",    "EQ-2.8",     "LEM-2.3",      "LEM-2.4",     "EQ-2.11",      "LEM-3.1.a",
      "LEM-3.1.b", "LEM-3.2",    "EQ-3.partial", "EQ-3.4",     "LEM-3.3",     "LEM-3.4",      "LEM-4.1",
      "EQ-4.2",    "LEM-4.2",    "LEM-4.3",    "LEM-4.4.a",    "LEM-4.4.b",   "LEM-4.5",      "LEM-4.6",
      "REC-w",     "EQ-4.10",    "EQ-4.11",    "EQ-4.12",      "EQ-4.13",     "REC-W",        "CONJ-5.1.a",
      "CONJ-5.1.b", "REM-5.1",   "CONJ-5.2.abc", "CONJ-5.3.ab"};
  std::set<std::string> ids;
  for (const auto& info : claim_registry()) {
    CHECK(ids.insert(info.id).second);
    CHECK_FALSE(info.statement.empty());
    CHECK_FALSE(info.signature.empty());
  }
  for (const auto& id : expected) CHECK_MESSAGE(ids.count(id) == 1, id);
  for (const auto& id : {"MUT-THM-1.1.i", "MUT-THM-1.2", "MUT-ID-1.8", "MUT-LEM-2.3"}) {
    CHECK(ids.count(id) == 1);
    CHECK(claim_info(id).group == ClaimGroup::Mutation);
  }
  CHECK_THROWS_AS(claim_info("NOPE"), UnknownClaim);
  CHECK_THROWS_AS(default_range("NOPE"), UnknownClaim);
  CHECK_THROWS_AS(verify_claim("NOPE", ParamRange{}), UnknownClaim);
}

TEST_CASE("suites") {
  CHECK(suite_names() == std::vector<std::string>{"theorems", "lemmas", "identities", "conjectures", "all"});
  const auto all = suite_claims("all");
  for (const auto& info : claim_registry()) {
    const bool listed = std::find(all.begin(), all.end(), info.id) != all.end();
    CHECK(listed == (info.group != ClaimGroup::Mutation));
  }
  std::size_t total = 0;
  for (const auto& name : {"theorems", "lemmas", "identities", "conjectures"}) total += suite_claims(name).size();
  CHECK(total == all.size());
  for (const auto& id : suite_claims("conjectures")) CHECK(is_conjecture(claim_info(id)));
  CHECK_THROWS_AS(suite_claims("bogus"), UnknownSuite);
  CHECK_THROWS_AS(run_suite("bogus", {}), UnknownSuite);
  CHECK_THROWS_AS(run_suite("", {}), UnknownSuite);
}

TEST_CASE("golden tables") {
  const std::vector<long> s{6, 23, 90, 432, 2286, 13176, 80418, 513764, 3400518, 23167311};
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s_quotient(static_cast<std::int64_t>(i + 1)) == s[i]);
  const std::vector<long> t{51, 271, 1398, 8505, 54387, 367551, 2570931, 18510739, 136282347};
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t_quotient(static_cast<std::int64_t>(i + 2)) == t[i]);
  const auto report = verify_claim("THM-1.1.i", with_n("THM-1.1.i", 50));
  CHECK(report.status == Status::Verified);
  REQUIRE(report.table.size() == 50);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(report.table[i].value == std::to_string(s[i]));
  const auto w = verify_claim("REC-W", with_n("REC-W", 12));
  REQUIRE(w.table.size() == 13);
  CHECK(w.table[12].value == "11699");
}

TEST_CASE("quotients agree with independently computed sums") {
  const auto M = oracle::motzkin_prefix(201);
  oracle::Z sum = 0;
  for (std::int64_t n = 1; n <= 200; ++n) {
    sum += (2 * n + 1) * M[static_cast<std::size_t>(n)] * M[static_cast<std::size_t>(n)];
    CHECK(s_quotient(n) * n == 2 * sum);
  }
  oracle::Z tsum = 0;
  for (std::int64_t n = 2; n <= 120; ++n) {
    const std::int64_t k = n - 1;
    tsum += k * (k + 1) * (8 * k + 9) * oracle::central_trinomial(k) * oracle::central_trinomial(k + 1);
    CHECK(t_quotient(n) * (n * n * (n * n - 1)) == 6 * tsum);
  }
}

TEST_CASE("pinned hand values") {
  // ID-1.8 at n = 1: 1*2*3*M_0^2*3^0 = 6 = 1*2*3*M_1*M_0
  CHECK(6 * oracle::motzkin(0) * oracle::motzkin(0) == 6);
  CHECK(6 * oracle::motzkin(1) * oracle::motzkin(0) == 6);
  const auto id18 = verify_claim("ID-1.8", with_n("ID-1.8", 1));
  CHECK(id18.status == Status::Verified);
  CHECK(id18.checked == 1);

  // LEM-2.4 at p = 5: sum C(2k,k)/(k 3^k) = 1 = (3^4 - 1)/5 mod 5
  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= 4; ++k) {
    const std::int64_t c = oracle::binomial(2 * k, k).get_si() % 5;
    lhs = (lhs + c * oracle::mod_inverse(k * oracle::ipow(3, static_cast<unsigned long>(k)).get_si(), 5)) % 5;
  }
  CHECK(lhs == 1);
  CHECK(fermat_quotient(Integer(3), 5) == 1);
  CHECK(verify_claim("LEM-2.4", with_primes("LEM-2.4", 5, 5)).status == Status::Verified);

  // REM-5.1 at p = 5: W_0..W_4 = -1, -1, 1, 5, 13, squares sum to 197 = 2 mod 5
  oracle::Z w2 = 0;
  for (std::int64_t k = 0; k < 5; ++k) w2 += oracle::motzkin_analog_W(k) * oracle::motzkin_analog_W(k);
  CHECK(w2 == 197);
  CHECK(verify_claim("REM-5.1", with_primes("REM-5.1", 5, 5)).status == Status::Verified);

  // CONJ-5.1.a at n = 2: 9 W_0^2 + 17 W_1^2 = 26 = 2 mod 4
  CHECK(9 + 17 == 26);
  const auto c51 = verify_claim("CONJ-5.1.a", with_n("CONJ-5.1.a", 2));
  CHECK(c51.status == Status::Verified);
  CHECK(c51.checked == 2);

  CHECK(verify_claim("LEM-4.5", with_n("LEM-4.5", 2)).status == Status::Verified);
  CHECK(verify_claim("LEM-2.1.a", with_n("LEM-2.1.a", 1)).status == Status::Verified);
}

TEST_CASE("square-root substitution") {
  auto run = [](std::int64_t b, std::int64_t c, std::uint64_t n_max) {
    ParamRange r = default_range("LEM-2.1.b");
    r.b_set = {b};
    r.c_set = {c};
    r.n_max = n_max;
    return verify_sqrt_d_claims(r);
  };
  // perfect-square branch: d = 1 gives s_3(1) = 11 = M_2(3,2); d = 9 gives 3^n
  CHECK(gen_motzkin(2, {3, 2}) == 11);
  const auto square = run(3, 2, 50);
  CHECK(square.status == Status::Verified);
  CHECK(square.checked == 51);
  CHECK(run(3, 0, 50).status == Status::Verified);
  // quadratic-extension branch, d = -3
  const auto ext = run(1, 1, 15);
  CHECK(ext.status == Status::Verified);
  CHECK(ext.checked == 16);
  // d = 0 is skipped, not failed
  const auto degenerate = run(2, 1, 5);
  CHECK(degenerate.status == Status::Skipped);
  CHECK(degenerate.checked == 0);
  CHECK(degenerate.skipped.size() == 1);
}

TEST_CASE("every non-conjecture claim verifies on a reduced range") {
  for (const auto& info : claim_registry()) {
    if (info.group == ClaimGroup::Mutation || is_conjecture(info) || info.id == "LEM-2.3") continue;
    ParamRange r = default_range(info.id);
    r.n_max = std::min<std::uint64_t>(r.n_max, 25);
    r.prime_hi = std::min<std::uint64_t>(r.prime_hi, 200);
    const auto report = verify_claim(info.id, r);
    CHECK_MESSAGE(report.status == Status::Verified, info.id);
    CHECK_MESSAGE(report.counterexamples.empty(), info.id);
  }
}

TEST_CASE("LEM-2.3 holds for a >= 1 and fails at a = 0 as printed") {
  ParamRange r = default_range("LEM-2.3");
  CHECK(r.n_max == 40);
  CHECK(r.qexp_a_max == 2);
  CHECK(r.qexp_b_max == 2);
  r.n_max = 12;
  const auto report = verify_claim("LEM-2.3", r);
  CHECK(report.status == Status::Counterexample);
  CHECK(report.checked == 3 * 3 * 12);
  for (const auto& c : report.counterexamples) {
    CHECK(param(c.params, "a") == 0);
    CHECK(param(c.params, "n") >= 5);
  }
  CHECK(report.counterexamples.size() == 3 * 8);
  // the first witness: a = b = 0, n = 5
  CHECK(param(report.counterexamples.front().params, "n") == 5);
  CHECK(report.counterexamples.front().detail == "remainder 1 + 1*q - 1*q^3");

  ParamRange only_4 = r;
  only_4.n_max = 4;
  CHECK(verify_claim("LEM-2.3", only_4).status == Status::Verified);
}

TEST_CASE("conjecture behaviour") {
  CHECK(verify_claim("CONJ-5.1.a", with_n("CONJ-5.1.a", 300)).status == Status::Verified);
  CHECK(verify_claim("REM-5.1", with_primes("REM-5.1", 2, 300)).status == Status::Verified);
  ParamRange hm = default_range("CONJ-5.2.abc");
  hm.n_max = 15;
  CHECK(verify_claim("CONJ-5.2.abc", hm).status == Status::Verified);
  const auto gcd_form = verify_claim("CONJ-5.3.ab", hm);
  CHECK(gcd_form.status == Status::Verified);
  CHECK(std::find(gcd_form.notes.begin(), gcd_form.notes.end(), "signed form prefactor: gcd(2,m-1,n)") !=
        gcd_form.notes.end());
  hm.signed_prefactor = SignedPrefactor::GcdPow2MMinus1N;
  const auto pow2 = verify_claim("CONJ-5.3.ab", hm);
  CHECK(pow2.status == Status::Counterexample);
  for (const auto& c : pow2.counterexamples) {
    CHECK(param(c.params, "m") == 1);
    CHECK(param(c.params, "n") % 2 == 0);
  }

  // (5.3): p divides the sum for every odd prime; the quotient congruence holds mod p only
  const auto c51b = verify_claim("CONJ-5.1.b", with_primes("CONJ-5.1.b", 2, 100));
  CHECK(c51b.status == Status::Counterexample);
  CHECK(c51b.skipped.size() == 1);
  std::set<std::int64_t> failing;
  for (const auto& c : c51b.counterexamples) {
    CHECK(c.detail.find("p does not divide") == std::string::npos);
    CHECK(c.detail.find("; congruent modulo p") != std::string::npos);
    failing.insert(param(c.params, "p"));
  }
  CHECK(failing.count(3) == 1);
  CHECK(failing.count(11) == 1);
  CHECK(failing.count(5) == 0);
  CHECK(failing.count(7) == 0);
}

TEST_CASE("REC-w records the detected index offset") {
  const auto report = verify_claim("REC-w", with_n("REC-w", 20));
  CHECK(report.status == Status::Verified);
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.front().rfind("index offset 0", 0) == 0);
}

TEST_CASE("mutated claims are caught within n <= 25") {
  for (const auto& id : {"MUT-THM-1.1.i", "MUT-THM-1.2", "MUT-ID-1.8", "MUT-LEM-2.3"}) {
    const ParamRange r = default_range(id);
    CHECK(r.n_max <= 25);
    const auto report = verify_claim(id, r);
    CHECK_MESSAGE(report.status == Status::Counterexample, id);
  }
}

TEST_CASE("status semantics and skipped points") {
  const auto none = verify_claim("THM-1.1.ii", with_primes("THM-1.1.ii", 2, 3));
  CHECK(none.status == Status::Skipped);
  CHECK(none.checked == 0);
  CHECK(none.skipped.size() == 2);
  CHECK(overall_status({none}) == Status::Skipped);
  CHECK(overall_status({}) == Status::Skipped);
  const auto ok = verify_claim("THM-1.1.i", with_n("THM-1.1.i", 5));
  CHECK(overall_status({ok, none}) == Status::Skipped);
  CHECK(overall_status({ok, ok}) == Status::Verified);
  const auto bad = verify_claim("MUT-THM-1.2", default_range("MUT-THM-1.2"));
  CHECK(overall_status({ok, none, bad}) == Status::Counterexample);
}

TEST_CASE("stop on first counterexample") {
  const ParamRange r = default_range("MUT-THM-1.2");
  const auto full = verify_claim("MUT-THM-1.2", r);
  const auto first = verify_claim("MUT-THM-1.2", r, {1, true});
  REQUIRE(full.counterexamples.size() > 1);
  CHECK(first.counterexamples.size() == 1);
  CHECK(first.counterexamples.front() == full.counterexamples.front());
  CHECK(first.checked < full.checked);
  CHECK(std::find(first.notes.begin(), first.notes.end(), "stopped at first counterexample") != first.notes.end());

  RangeOverrides o;
  o.n_max = 30;
  o.prime_hi = 200;
  const auto suite = run_suite("conjectures", o, {1, true});
  REQUIRE_FALSE(suite.empty());
  CHECK(suite.back().status == Status::Counterexample);
  CHECK(suite.back().claim == "CONJ-5.1.b");
  CHECK(suite.size() < suite_claims("conjectures").size());
}

TEST_CASE("invalid ranges") {
  ParamRange r = default_range("THM-1.3.a");
  r.b_set.clear();
  CHECK_THROWS_AS(verify_claim("THM-1.3.a", r), InvalidRange);
  ParamRange hm = default_range("CONJ-5.2.abc");
  hm.h_max = 0;
  CHECK_THROWS_AS(verify_claim("CONJ-5.2.abc", hm), InvalidRange);
  ParamRange p = default_range("LEM-2.4");
  p.prime_lo = 1;
  CHECK_THROWS_AS(verify_claim("LEM-2.4", p), InvalidRange);
}

TEST_CASE("family entry points") {
  const ParamRange r = with_primes("LEM-2.4", 2, 100);
  const auto reports = verify_congruence_claims({"LEM-2.4", "THM-1.1.ii"}, r);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].claim == "LEM-2.4");
  CHECK(reports[1].status == Status::Verified);
  CHECK_THROWS_AS(verify_congruence_claims({"ID-2.3"}, r), UnknownClaim);
  const auto poly = verify_polynomial_claims({"ID-2.3", "LEM-4.5"}, with_n("ID-2.3", 10));
  CHECK(overall_status(poly) == Status::Verified);
  CHECK_THROWS_AS(verify_polynomial_claims({"THM-1.2"}, r), UnknownClaim);
}

TEST_CASE("overrides apply on top of defaults") {
  RangeOverrides o;
  o.n_max = 7;
  o.b_set = std::vector<std::int64_t>{1, 2};
  const ParamRange base = default_range("THM-1.3.a");
  const ParamRange r = o.apply(base);
  CHECK(r.n_max == 7);
  CHECK(r.b_set == std::vector<std::int64_t>{1, 2});
  CHECK(r.c_set == base.c_set);
  CHECK(r.prime_hi == base.prime_hi);
  CHECK(RangeOverrides{}.apply(base) == base);
  CHECK(default_range("THM-1.1.i", true).n_max > default_range("THM-1.1.i").n_max);
}

TEST_CASE("reports do not depend on the number of workers") {
  std::mt19937 rng(31337);
  std::vector<std::string> ids;
  for (const auto& info : claim_registry()) ids.push_back(info.id);
  for (int trial = 0; trial < 12; ++trial) {
    const std::string id = ids[rng() % ids.size()];
    ParamRange r = default_range(id);
    r.n_max = std::min<std::uint64_t>(r.n_max, 8 + rng() % 20);
    r.prime_hi = std::min<std::uint64_t>(r.prime_hi, 100 + rng() % 200);
    const unsigned jobs = 2 + static_cast<unsigned>(rng() % 7);
    const auto serial = strip_elapsed(verify_claim(id, r, {1, false}));
    const auto parallel = strip_elapsed(verify_claim(id, r, {jobs, false}));
    CHECK_MESSAGE(serial == parallel, id << " with " << jobs << " workers");
    // verified iff no counterexample and something was checked
    CHECK((serial.status == Status::Verified) == (serial.counterexamples.empty() && serial.checked > 0));
  }
}
