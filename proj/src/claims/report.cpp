#include "mtc/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace mtc {

using Json = nlohmann::ordered_json;

namespace {

Json params_to_json(const ParamTuple& t) {
  Json out = Json::object();
  for (const auto& [name, value] : t) std::visit([&, &name = name](const auto& v) { out[name] = v; }, value);
  return out;
}

ParamTuple params_from_json(const Json& j) {
  if (!j.is_object()) throw ReportParseError("parameter tuple must be an object");
  ParamTuple t;
  for (const auto& [name, value] : j.items()) {
    if (value.is_string())
      t.emplace_back(name, ParamValue{value.get<std::string>()});
    else if (value.is_number_integer())
      t.emplace_back(name, ParamValue{value.get<std::int64_t>()});
    else
      throw ReportParseError("parameter " + name + " must be an integer or a string");
  }
  return t;
}

Json range_to_json(const ParamRange& r) {
  Json j = Json::object();
  j["n_max"] = r.n_max;
  j["prime_lo"] = r.prime_lo;
  j["prime_hi"] = r.prime_hi;
  j["b_set"] = r.b_set;
  j["c_set"] = r.c_set;
  j["h_max"] = r.h_max;
  j["m_max"] = r.m_max;
  j["qexp_a_max"] = r.qexp_a_max;
  j["qexp_b_max"] = r.qexp_b_max;
  j["signed_prefactor"] = to_string(r.signed_prefactor);
  return j;
}

ParamRange range_from_json(const Json& j) {
  ParamRange r;
  r.n_max = j.at("n_max").get<std::uint64_t>();
  r.prime_lo = j.at("prime_lo").get<std::uint64_t>();
  r.prime_hi = j.at("prime_hi").get<std::uint64_t>();
  r.b_set = j.at("b_set").get<std::vector<std::int64_t>>();
  r.c_set = j.at("c_set").get<std::vector<std::int64_t>>();
  r.h_max = j.at("h_max").get<std::uint64_t>();
  r.m_max = j.at("m_max").get<std::uint64_t>();
  r.qexp_a_max = j.at("qexp_a_max").get<std::uint64_t>();
  r.qexp_b_max = j.at("qexp_b_max").get<std::uint64_t>();
  r.signed_prefactor = signed_prefactor_from_string(j.at("signed_prefactor").get<std::string>());
  return r;
}

Json report_to_json(const VerificationReport& r, bool include_elapsed) {
  Json j = Json::object();
  j["claim"] = r.claim;
  j["params"] = range_to_json(r.range);
  j["status"] = to_string(r.status);
  j["checked"] = r.checked;
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back(Json{{"params", params_to_json(c.params)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"detail", c.detail}});
  j["counterexamples"] = std::move(ces);
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back(Json{{"params", params_to_json(s.params)}, {"reason", s.reason}});
  j["skipped"] = std::move(skipped);
  Json table = Json::array();
  for (const auto& t : r.table) table.push_back(Json{{"params", params_to_json(t.params)}, {"value", t.value}});
  j["table"] = std::move(table);
  j["notes"] = r.notes;
  if (include_elapsed) j["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1000.0;
  return j;
}

VerificationReport report_from_json_value(const Json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.range = range_from_json(j.at("params"));
  r.status = status_from_string(j.at("status").get<std::string>());
  r.checked = j.at("checked").get<std::uint64_t>();
  for (const auto& c : j.at("counterexamples"))
    r.counterexamples.push_back({params_from_json(c.at("params")), c.at("lhs").get<std::string>(),
                                 c.at("rhs").get<std::string>(), c.at("detail").get<std::string>()});
  for (const auto& s : j.at("skipped"))
    r.skipped.push_back({params_from_json(s.at("params")), s.at("reason").get<std::string>()});
  for (const auto& t : j.at("table")) r.table.push_back({params_from_json(t.at("params")), t.at("value").get<std::string>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("elapsed_ms"))
    r.elapsed = std::chrono::microseconds(std::llround(j.at("elapsed_ms").get<double>() * 1000.0));
  return r;
}

template <class F>
auto parse_with(std::string_view text, F f) {
  try {
    return f(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ReportParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ReportParseError(e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string param_values(const ParamTuple& t) {
  std::string out;
  for (const auto& [name, value] : t) {
    if (!out.empty()) out += ", ";
    out += name + "=";
    out += std::holds_alternative<std::string>(value) ? std::get<std::string>(value)
                                                      : std::to_string(std::get<std::int64_t>(value));
  }
  return out;
}

std::string table_heading(const std::string& claim) {
  if (claim == "THM-1.1.i") return "s(n)";
  if (claim == "THM-1.2") return "t(n)";
  if (claim == "REC-W") return "W_n";
  return "value";
}

}  // namespace

std::string render_json(const VerificationReport& report, const JsonOptions& options) {
  return report_to_json(report, options.include_elapsed).dump(options.indent);
}

VerificationReport report_from_json(std::string_view text) { return parse_with(text, report_from_json_value); }

std::string render_json(const std::vector<VerificationReport>& reports, std::optional<std::string> suite,
                        const JsonOptions& options) {
  Json j = Json::object();
  j["suite"] = suite ? Json(*suite) : Json(nullptr);
  j["status"] = to_string(overall_status(reports));
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r, options.include_elapsed));
  j["reports"] = std::move(arr);
  return j.dump(options.indent);
}

std::vector<VerificationReport> reports_from_json(std::string_view text) {
  return parse_with(text, [](const Json& j) {
    std::vector<VerificationReport> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from_json_value(r));
    return out;
  });
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "claim,param,status,lhs,rhs,witness\n";
  auto row = [&](const std::string& claim, const std::string& param, const std::string& status, const std::string& lhs,
                 const std::string& rhs, const std::string& witness) {
    out << csv_field(claim) << ',' << csv_field(param) << ',' << csv_field(status) << ',' << csv_field(lhs) << ','
        << csv_field(rhs) << ',' << csv_field(witness) << '\n';
  };
  for (const auto& r : reports) {
    row(r.claim, "checked=" + std::to_string(r.checked), to_string(r.status), "", "", "");
    for (const auto& c : r.counterexamples) row(r.claim, param_values(c.params), "counterexample", c.lhs, c.rhs, c.detail);
    for (const auto& s : r.skipped) row(r.claim, param_values(s.params), "skipped", "", "", s.reason);
    for (const auto& t : r.table) row(r.claim, param_values(t.params), "verified", "", "", t.value);
  }
  return out.str();
}

std::string render_human(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  std::size_t id_width = 5;
  for (const auto& r : reports) id_width = std::max(id_width, r.claim.size());
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(id_width)) << r.claim << "  " << std::setw(14) << to_string(r.status)
        << " checked " << r.checked;
    if (!r.skipped.empty()) out << ", skipped " << r.skipped.size();
    out << "  (" << std::fixed << std::setprecision(1) << static_cast<double>(r.elapsed.count()) / 1000.0 << " ms)\n";
    for (const auto& note : r.notes) out << "    note: " << note << '\n';
    for (const auto& c : r.counterexamples) {
      out << "    counterexample " << param_values(c.params) << ": lhs " << c.lhs << ", rhs " << c.rhs;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << '\n';
    }
    if (!r.table.empty()) {
      std::size_t key_width = 1, value_width = table_heading(r.claim).size();
      for (const auto& t : r.table) {
        key_width = std::max(key_width, param_values(t.params).size());
        value_width = std::max(value_width, t.value.size());
      }
      out << "    " << std::right << std::setw(static_cast<int>(key_width)) << "" << "  "
          << std::setw(static_cast<int>(value_width)) << table_heading(r.claim) << '\n';
      for (const auto& t : r.table) {
        out << "    " << std::setw(static_cast<int>(key_width)) << param_values(t.params) << "  "
            << std::setw(static_cast<int>(value_width)) << t.value << '\n';
      }
      out << std::left;
    }
  }
  out << "overall: " << to_string(overall_status(reports)) << '\n';
  return out.str();
}

}  // namespace mtc
