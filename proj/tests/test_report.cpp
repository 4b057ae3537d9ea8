#include "doctest.h"
#include "json.hpp"
#include "mtc/report.hpp"

using namespace mtc;
using Json = nlohmann::ordered_json;

namespace {

VerificationReport sample() {
  VerificationReport r;
  r.claim = "CONJ-5.1.b";
  r.range.n_max = 12;
  r.range.prime_lo = 2;
  r.range.prime_hi = 50;
  r.range.b_set = {-4, 1};
  r.range.c_set = {0};
  r.range.h_max = 3;
  r.range.m_max = 2;
  r.range.qexp_a_max = 1;
  r.range.qexp_b_max = 2;
  r.range.signed_prefactor = SignedPrefactor::GcdPow2MMinus1N;
  r.status = Status::Counterexample;
  r.checked = 14;
  r.counterexamples.push_back({{{"p", std::int64_t{3}}}, "8", "5", "residues modulo 9; congruent modulo p"});
  r.counterexamples.push_back({{{"form", std::string("a")}, {"n", std::int64_t{-2}}}, "1 + 2*q", "0", "quote \" and, comma"});
  r.skipped.push_back({{{"p", std::int64_t{2}}}, "requires an odd prime"});
  r.table.push_back({{{"n", std::int64_t{1}}}, "6"});
  r.notes = {"first note", "second\nline"};
  r.elapsed = std::chrono::microseconds(123457);
  return r;
}

}  // namespace

TEST_CASE("single report JSON round-trip") {
  const VerificationReport r = sample();
  CHECK(report_from_json(render_json(r)) == r);
  VerificationReport plain;
  plain.claim = "THM-1.1.i";
  CHECK(report_from_json(render_json(plain)) == plain);
}

TEST_CASE("stable field order") {
  const Json j = Json::parse(render_json(sample()));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"claim", "params", "status", "checked", "counterexamples", "skipped", "table",
                                         "notes", "elapsed_ms"});
  CHECK(j["status"] == "counterexample");
  CHECK(j["elapsed_ms"].get<double>() == doctest::Approx(123.457));
  CHECK(j["params"]["signed_prefactor"] == to_string(SignedPrefactor::GcdPow2MMinus1N));
  CHECK(j["counterexamples"][0]["params"]["p"] == 3);
  const Json no_time = Json::parse(render_json(sample(), JsonOptions{false, 2}));
  CHECK_FALSE(no_time.contains("elapsed_ms"));
}

TEST_CASE("batch JSON round-trip") {
  VerificationReport ok;
  ok.claim = "ID-1.8";
  ok.status = Status::Verified;
  ok.checked = 5;
  const std::vector<VerificationReport> reports{sample(), ok};
  const std::string text = render_json(reports, std::string("all"));
  const Json j = Json::parse(text);
  CHECK(j["suite"] == "all");
  CHECK(j["status"] == "counterexample");
  CHECK(reports_from_json(text) == reports);
  CHECK(Json::parse(render_json(reports, std::nullopt))["suite"].is_null());
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(report_from_json("{"), ReportParseError);
  CHECK_THROWS_AS(report_from_json("{}"), ReportParseError);
  Json j = Json::parse(render_json(sample()));
  j["status"] = "maybe";
  CHECK_THROWS_AS(report_from_json(j.dump()), ReportParseError);
  j = Json::parse(render_json(sample()));
  j["counterexamples"][0]["params"]["p"] = 1.5;
  CHECK_THROWS_AS(report_from_json(j.dump()), ReportParseError);
  CHECK_THROWS_AS(reports_from_json("[]"), ReportParseError);
}

TEST_CASE("CSV rows") {
  const std::string csv = render_csv({sample()});
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(csv);
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() >= 6);
  CHECK(lines[0] == "claim,param,status,lhs,rhs,witness");
  CHECK(lines[1] == "CONJ-5.1.b,checked=14,counterexample,,,");
  CHECK(lines[2] == "CONJ-5.1.b,p=3,counterexample,8,5,residues modulo 9; congruent modulo p");
  CHECK(lines[3] == "CONJ-5.1.b,\"form=a, n=-2\",counterexample,1 + 2*q,0,\"quote \"\" and, comma\"");
  CHECK(lines[4] == "CONJ-5.1.b,p=2,skipped,,,requires an odd prime");
  CHECK(lines[5] == "CONJ-5.1.b,n=1,verified,,,6");
}

TEST_CASE("human format") {
  VerificationReport s;
  s.claim = "THM-1.1.i";
  s.status = Status::Verified;
  s.checked = 2;
  s.table = {{{{"n", std::int64_t{1}}}, "6"}, {{{"n", std::int64_t{10}}}, "23167311"}};
  const std::string text = render_human({s, sample()});
  CHECK(text.find("s(n)") != std::string::npos);
  CHECK(text.find("   n=1         6\n") != std::string::npos);
  CHECK(text.find("  n=10  23167311\n") != std::string::npos);
  CHECK(text.find("counterexample p=3: lhs 8, rhs 5") != std::string::npos);
  CHECK(text.find("note: first note") != std::string::npos);
  CHECK(text.rfind("overall: counterexample\n") == text.size() - std::string("overall: counterexample\n").size());
}
