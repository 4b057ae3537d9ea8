#pragma once

// Report rendering: JSON (canonical, round-trips), CSV and a human summary.

#include "mtc/claims.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JsonOptions {
  bool include_elapsed = true;
  int indent = 2;  // negative for compact output
};

/// One report as a JSON object with fields in the order claim, params, status,
/// checked, counterexamples, skipped, table, notes, elapsed_ms.
std::string render_json(const VerificationReport& report, const JsonOptions& options = {});
VerificationReport report_from_json(std::string_view text);

/// A batch: {"suite": name or null, "status": overall, "reports": [...]}.
std::string render_json(const std::vector<VerificationReport>& reports, std::optional<std::string> suite,
                        const JsonOptions& options = {});
std::vector<VerificationReport> reports_from_json(std::string_view text);

/// Columns claim, param, status, lhs, rhs, witness. One row per counterexample,
/// skipped point and table entry, plus a summary row per claim.
std::string render_csv(const std::vector<VerificationReport>& reports);

/// Summary line per claim, notes, counterexamples, and aligned golden tables.
std::string render_human(const std::vector<VerificationReport>& reports);

}  // namespace mtc
