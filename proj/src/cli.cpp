#include "mtc/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "mtc/claims.hpp"
#include "mtc/report.hpp"
#include "mtc/sequences.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace mtc {

namespace {

enum class Format { Human, Json, Csv };

struct RangeFlags {
  std::optional<std::uint64_t> n_max, prime_max, h_max, m_max, a_max, b_exp_max;
  std::optional<std::string> b_set, c_set, sign_prefactor;
};

struct OutputFlags {
  Format format = Format::Human;
  std::string out_path;
  unsigned jobs = 1;
  bool stop_on_first = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(flag + ": not an integer: '" + s + "'");
  return v;
}

// "a..b", "a,b,c" or a mix such as "-2,0..3".
std::vector<std::int64_t> parse_int_set(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(part, flag));
      continue;
    }
    const auto lo = parse_int(part.substr(0, dots), flag);
    const auto hi = parse_int(part.substr(dots + 2), flag);
    if (lo > hi) throw UsageError(flag + ": empty interval '" + part + "'");
    if (hi - lo > 100000) throw UsageError(flag + ": interval too large '" + part + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty set");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RangeOverrides to_overrides(const RangeFlags& f) {
  RangeOverrides o;
  o.n_max = f.n_max;
  o.prime_hi = f.prime_max;
  o.h_max = f.h_max;
  o.m_max = f.m_max;
  o.qexp_a_max = f.a_max;
  o.qexp_b_max = f.b_exp_max;
  if (f.b_set) o.b_set = parse_int_set(*f.b_set, "--b-set");
  if (f.c_set) o.c_set = parse_int_set(*f.c_set, "--c-set");
  if (f.sign_prefactor) {
    if (*f.sign_prefactor == "gcd")
      o.signed_prefactor = SignedPrefactor::Gcd2MMinus1N;
    else if (*f.sign_prefactor == "pow2")
      o.signed_prefactor = SignedPrefactor::GcdPow2MMinus1N;
    else
      throw UsageError("--sign-prefactor must be gcd or pow2");
  }
  if (o.h_max && *o.h_max == 0) throw UsageError("--h-max must be at least 1");
  if (o.m_max && *o.m_max == 0) throw UsageError("--m-max must be at least 1");
  if (o.n_max && *o.n_max > 1000000) throw UsageError("--n-max is capped at 1000000");
  if (o.prime_hi && *o.prime_hi > 100000000) throw UsageError("--prime-max is capped at 100000000");
  return o;
}

void add_range_flags(CLI::App& cmd, RangeFlags& f) {
  cmd.add_option("--n-max", f.n_max, "largest n checked");
  cmd.add_option("--prime-max", f.prime_max, "largest prime checked");
  cmd.add_option("--b-set", f.b_set, "b values, e.g. --b-set=-4..4 or --b-set=1,2,5");
  cmd.add_option("--c-set", f.c_set, "c values, same syntax as --b-set");
  cmd.add_option("--h-max", f.h_max, "largest h in the S^(h) sums");
  cmd.add_option("--m-max", f.m_max, "largest m in the S^(h) sums");
  cmd.add_option("--a-max", f.a_max, "largest a in the q-analogue");
  cmd.add_option("--b-exp-max", f.b_exp_max, "largest b in the q-analogue");
  cmd.add_option("--sign-prefactor", f.sign_prefactor, "prefactor of the alternating S^(h) sums: gcd or pow2");
}

void add_output_flags(CLI::App& cmd, OutputFlags& f) {
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd.add_option("--format", f.format, "human, json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd.add_option("--out", f.out_path, "write the report to this file");
  cmd.add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd.add_flag("--stop-on-first", f.stop_on_first, "stop at the first counterexample");
}

std::string render(const std::vector<VerificationReport>& reports, const std::optional<std::string>& suite,
                   Format format) {
  switch (format) {
    case Format::Json: return render_json(reports, suite) + "\n";
    case Format::Csv: return render_csv(reports);
    case Format::Human: return render_human(reports);
  }
  return {};
}

std::string summary(const std::vector<VerificationReport>& reports) {
  std::ostringstream s;
  std::size_t verified = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Verified) ++verified;
    if (r.status == Status::Counterexample) ++failed;
    if (r.status == Status::Skipped) ++skipped;
  }
  s << reports.size() << " claims: " << verified << " verified, " << failed << " with counterexamples, " << skipped
    << " skipped\n";
  for (const auto& r : reports)
    if (r.status == Status::Counterexample) s << "  counterexample: " << r.claim << '\n';
  s << "overall: " << to_string(overall_status(reports)) << '\n';
  return s.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file: " + path);
  return file;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::optional<std::string>& suite,
                 const OutputFlags& flags, std::ofstream* file, std::ostream& out) {
  const std::string text = render(reports, suite, flags.format);
  if (file) {
    *file << text;
    file->flush();
    if (!*file) throw std::runtime_error("failed writing " + flags.out_path);
    out << summary(reports);
  } else {
    out << text;
  }
  return overall_status(reports) == Status::Counterexample ? kExitCounterexample : kExitOk;
}

struct SeqSpec {
  std::optional<Sequence> table;
  std::int64_t first = 0;
  bool generalized = false;
};

const std::map<std::string, SeqSpec>& seq_specs() {
  static const std::map<std::string, SeqSpec> specs{
      {"motzkin", {Sequence::Motzkin, 0, false}},
      {"trinomial", {Sequence::CentralTrinomial, 0, false}},
      {"gen-trinomial", {Sequence::GenTrinomial, 0, true}},
      {"gen-motzkin", {Sequence::GenMotzkin, 0, true}},
      {"delannoy", {Sequence::Delannoy, 0, false}},
      {"schroder-little", {Sequence::SchroderLittle, 1, false}},
      {"schroder-large", {Sequence::SchroderLarge, 0, false}},
      {"catalan", {Sequence::Catalan, 0, false}},
      {"W", {Sequence::MotzkinAnalogW, 0, false}},
      {"s", {std::nullopt, 1, false}},
      {"t", {std::nullopt, 2, false}},
  };
  return specs;
}

std::string seq_names() {
  std::string out;
  for (const auto& [name, spec] : seq_specs()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

int run_seq(const std::string& name, std::uint64_t max, std::optional<std::int64_t> b, std::optional<std::int64_t> c,
            Format format, std::ostream& out) {
  const auto it = seq_specs().find(name);
  if (it == seq_specs().end()) throw UsageError("unknown sequence '" + name + "' (known: " + seq_names() + ")");
  const SeqSpec& spec = it->second;
  if (!spec.generalized && (b || c)) throw UsageError("--b and --c apply only to gen-trinomial and gen-motzkin");
  if (max > 100000) throw UsageError("--max is capped at 100000");
  const TrinomialParams p(b.value_or(1), c.value_or(1));

  std::vector<std::pair<std::int64_t, std::string>> rows;
  if (spec.table) {
    const auto values = sequence_table(*spec.table, max, p);
    for (auto n = static_cast<std::uint64_t>(spec.first); n <= max; ++n)
      rows.emplace_back(static_cast<std::int64_t>(n), to_string((*values)[n]));
  } else {
    for (auto n = spec.first; n <= static_cast<std::int64_t>(max); ++n)
      rows.emplace_back(n, to_string(name == "s" ? s_quotient(n) : t_quotient(n)));
  }

  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["sequence"] = name;
    if (spec.generalized) j["params"] = {{"b", p.b()}, {"c", p.c()}};
    j["values"] = nlohmann::ordered_json::array();
    for (const auto& [n, v] : rows) j["values"].push_back({{"n", n}, {"value", v}});
    out << j.dump(2) << '\n';
  } else if (format == Format::Csv) {
    out << "n,value\n";
    for (const auto& [n, v] : rows) out << n << ',' << v << '\n';
  } else {
    std::size_t w = 1;
    for (const auto& row : rows) w = std::max(w, std::to_string(row.first).size());
    for (const auto& [n, v] : rows) out << std::setw(static_cast<int>(w)) << n << "  " << v << '\n';
  }
  return kExitOk;
}

int run_list(std::ostream& out) {
  std::size_t w = 0;
  for (const auto& info : claim_registry()) w = std::max(w, info.id.size());
  for (const auto& info : claim_registry()) {
    out << std::left << std::setw(static_cast<int>(w)) << info.id << "  " << std::setw(10) << to_string(info.group)
        << "  " << std::setw(23) << to_string(info.kind) << "  " << info.signature << "  " << info.statement << '\n';
  }
  out << "suites:";
  for (const auto& s : suite_names()) out << ' ' << s;
  out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Motzkin and central trinomial number identities, congruences and conjectures",
               "mtc"};
  app.require_subcommand(1);

  std::string seq_name;
  std::uint64_t seq_max = 10;
  std::optional<std::int64_t> seq_b, seq_c;
  Format seq_format = Format::Human;
  auto* seq = app.add_subcommand("seq", "print a sequence table");
  seq->add_option("name", seq_name, "sequence: " + seq_names())->required();
  seq->add_option("--max", seq_max, "largest index");
  seq->add_option("--b", seq_b, "b for the generalized sequences (default 1)");
  seq->add_option("--c", seq_c, "c for the generalized sequences (default 1)");
  seq->add_option("--format", seq_format, "human, json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}},
          CLI::ignore_case));

  std::vector<std::string> claim_ids;
  RangeFlags verify_range;
  OutputFlags verify_output;
  auto* verify = app.add_subcommand("verify", "verify claims by id");
  verify->add_option("claims", claim_ids, "claim ids, e.g. THM-1.1.i")->required();
  add_range_flags(*verify, verify_range);
  add_output_flags(*verify, verify_output);

  std::string suite_name;
  bool deep = false;
  RangeFlags suite_range;
  OutputFlags suite_output;
  auto* suite = app.add_subcommand("suite", "run a named suite: theorems, lemmas, identities, conjectures, all");
  suite->add_option("name", suite_name, "suite name")->required();
  add_range_flags(*suite, suite_range);
  add_output_flags(*suite, suite_output);
  suite->add_flag("--deep", deep, "use the wider deep ranges");

  auto* list = app.add_subcommand("list", "list registered claims and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq) return run_seq(seq_name, seq_max, seq_b, seq_c, seq_format, out);
    if (*list) return run_list(out);

    if (*verify) {
      // Everything is validated before the first claim runs.
      for (const auto& id : claim_ids) claim_info(id);
      const RangeOverrides overrides = to_overrides(verify_range);
      std::optional<std::ofstream> file;
      if (!verify_output.out_path.empty()) file = open_output(verify_output.out_path);
      const RunOptions options{verify_output.jobs, verify_output.stop_on_first};
      std::vector<VerificationReport> reports;
      for (const auto& id : claim_ids) {
        reports.push_back(verify_claim(id, overrides.apply(default_range(id)), options));
        if (options.stop_on_first && reports.back().status == Status::Counterexample) break;
      }
      return emit_reports(reports, std::nullopt, verify_output, file ? &*file : nullptr, out);
    }

    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite_name) == names.end()) throw UnknownSuite(suite_name);
    const RangeOverrides overrides = to_overrides(suite_range);
    std::optional<std::ofstream> file;
    if (!suite_output.out_path.empty()) file = open_output(suite_output.out_path);
    const RunOptions options{suite_output.jobs, suite_output.stop_on_first};
    const auto reports = run_suite(suite_name, overrides, options, deep);
    return emit_reports(reports, suite_name, suite_output, file ? &*file : nullptr, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownClaim& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidRange& e) {
    err << "error: invalid range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace mtc
