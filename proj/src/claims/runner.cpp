#include "claim_impl.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace mtc {

namespace {

using detail::PointResult;

// Evaluates points [begin, end) on `jobs` workers; results land at their index.
void evaluate_batch(const detail::PreparedClaim& claim, std::size_t begin, std::size_t end, unsigned jobs,
                    std::vector<std::optional<PointResult>>& results) {
  std::vector<std::exception_ptr> errors(end - begin);
  std::atomic<std::size_t> next{begin};
  auto worker = [&] {
    for (std::size_t i = next++; i < end; i = next++) {
      try {
        results[i] = claim.evaluate(i);
      } catch (...) {
        errors[i - begin] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(end - begin)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_family(const std::vector<std::string>& ids, const std::vector<std::string_view>& family,
                  const char* name) {
  for (const auto& id : ids) {
    if (std::find(family.begin(), family.end(), id) == family.end())
      throw UnknownClaim(id + " (not a " + std::string(name) + " claim)");
  }
}

std::vector<VerificationReport> verify_all(const std::vector<std::string>& ids, const ParamRange& range,
                                           const RunOptions& options) {
  std::vector<VerificationReport> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(verify_claim(id, range, options));
  return out;
}

}  // namespace

VerificationReport verify_claim(std::string_view id, const ParamRange& range, const RunOptions& options) {
  const auto& def = detail::definition(id);
  if (range.prime_lo < 2) throw InvalidRange("prime_lo must be at least 2");

  const auto start = std::chrono::steady_clock::now();
  detail::PreparedClaim prepared = def.build(range);

  const std::size_t total = prepared.points.size();
  std::vector<std::optional<PointResult>> results(total);
  std::size_t evaluated = total;
  if (!options.stop_on_first) {
    evaluate_batch(prepared, 0, total, options.jobs, results);
  } else {
    const std::size_t batch = std::max<std::size_t>(16, 4 * static_cast<std::size_t>(options.jobs));
    for (std::size_t begin = 0; begin < total; begin += batch) {
      const std::size_t end = std::min(total, begin + batch);
      evaluate_batch(prepared, begin, end, options.jobs, results);
      auto it = std::find_if(results.begin() + static_cast<std::ptrdiff_t>(begin),
                             results.begin() + static_cast<std::ptrdiff_t>(end), [](const auto& r) { return !r->ok; });
      if (it != results.begin() + static_cast<std::ptrdiff_t>(end)) {
        evaluated = static_cast<std::size_t>(it - results.begin()) + 1;
        break;
      }
    }
  }

  VerificationReport report;
  report.claim = def.info.id;
  report.range = range;
  report.skipped = std::move(prepared.skipped);
  report.notes = std::move(prepared.notes);
  report.checked = evaluated;
  for (std::size_t i = 0; i < evaluated; ++i) {
    const PointResult& r = *results[i];
    if (!r.ok) report.counterexamples.push_back({prepared.points[i], r.lhs, r.rhs, r.detail});
    if (r.table_value) report.table.push_back({prepared.points[i], *r.table_value});
  }
  if (!report.counterexamples.empty()) {
    report.status = Status::Counterexample;
  } else {
    report.status = report.checked > 0 ? Status::Verified : Status::Skipped;
  }
  if (options.stop_on_first && evaluated < total) report.notes.push_back("stopped at first counterexample");
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<VerificationReport> verify_congruence_claims(const std::vector<std::string>& ids, const ParamRange& range,
                                                         const RunOptions& options) {
  check_family(ids, {"THM-1.1.ii", "LEM-2.4", "EQ-2.11", "CONJ-5.1.a", "CONJ-5.1.b", "REM-5.1", "LEM-3.4", "LEM-4.3"},
               "congruence");
  return verify_all(ids, range, options);
}

std::vector<VerificationReport> verify_polynomial_claims(const std::vector<std::string>& ids, const ParamRange& range,
                                                         const RunOptions& options) {
  check_family(ids,
               {"ID-2.3", "LEM-2.1.a", "LEM-4.5", "LEM-4.6", "REC-w", "EQ-4.13", "CONJ-5.2.abc", "CONJ-5.3.ab",
                "LEM-2.3"},
               "polynomial");
  return verify_all(ids, range, options);
}

VerificationReport verify_sqrt_d_claims(const ParamRange& range, const RunOptions& options) {
  return verify_claim("LEM-2.1.b", range, options);
}

std::vector<VerificationReport> run_suite(std::string_view suite, const RangeOverrides& overrides,
                                          const RunOptions& options, bool deep) {
  const auto ids = suite_claims(suite);
  if (ids.empty()) throw UnknownSuite(std::string(suite));
  std::vector<VerificationReport> out;
  for (const auto& id : ids) {
    out.push_back(verify_claim(id, overrides.apply(default_range(id, deep)), options));
    if (options.stop_on_first && out.back().status == Status::Counterexample) break;
  }
  return out;
}

Status overall_status(const std::vector<VerificationReport>& reports) {
  bool all_verified = !reports.empty();
  for (const auto& r : reports) {
    if (r.status == Status::Counterexample) return Status::Counterexample;
    if (r.status != Status::Verified) all_verified = false;
  }
  return all_verified ? Status::Verified : Status::Skipped;
}

}  // namespace mtc
