#pragma once

// Verification reports: an ordered list of named checks with a status,
// a detail line and an elapsed time, plus JSON and text emitters.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lmv/error.hpp"

namespace lmv {

enum class CheckStatus { pass, fail, informational_pass, informational_fail, skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::informational_pass: return "informational-pass";
    case CheckStatus::informational_fail: return "informational-fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
  std::int64_t ms = 0;
};

struct ReportSpec {
  int n = 0;
  int r = 0;
  std::uint32_t p = 0;
  std::uint32_t u = 0;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(ReportSpec spec) : spec_(spec) {}

  const ReportSpec& spec() const { return spec_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult check) {
    for (const auto& c : checks_)
      if (c.name == check.name) throw InvalidArgument("duplicate check name '" + check.name + "'");
    checks_.push_back(std::move(check));
  }

  /// Informational outcomes never count against the report.
  bool overall_pass() const {
    for (const auto& c : checks_)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }

  /// Detail of the first failed check, if any.
  const CheckResult* first_failure() const {
    for (const auto& c : checks_)
      if (c.status == CheckStatus::fail) return &c;
    return nullptr;
  }

  /// Runs `body`, which returns {ok, detail}, and records its outcome. Engine
  /// errors, including resource exhaustion, become a failed check.
  template <class F>
  const CheckResult& run(std::string name, bool informational, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    result.name = std::move(name);
    try {
      auto [ok, detail] = body();
      result.detail = std::move(detail);
      if (informational)
        result.status = ok ? CheckStatus::informational_pass : CheckStatus::informational_fail;
      else
        result.status = ok ? CheckStatus::pass : CheckStatus::fail;
    } catch (const Error& e) {
      result.detail = e.what();
      result.status = informational ? CheckStatus::informational_fail : CheckStatus::fail;
    }
    result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    add(std::move(result));
    return checks_.back();
  }

 private:
  ReportSpec spec_;
  std::vector<CheckResult> checks_;
};

enum class ReportFormat { json, text };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "text") return ReportFormat::text;
  throw InvalidArgument("unknown report format '" + std::string(s) + "'");
}

inline nlohmann::ordered_json report_json(const VerificationReport& report, bool timings = true) {
  if (report.checks().empty()) throw InvalidArgument("schema violation: report has no checks");
  nlohmann::ordered_json out;
  const auto& s = report.spec();
  out["spec"] = {{"n", s.n}, {"r", s.r}, {"p", s.p}, {"u", s.u}};
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks())
    out["checks"].push_back(
        {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"ms", timings ? c.ms : 0}});
  out["overall"] = report.overall_pass() ? "pass" : "fail";
  return out;
}

/// With `timings` false every elapsed time prints as 0, so equal inputs give
/// byte-identical output.
inline void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& sink,
                        bool timings = true) {
  if (report.checks().empty()) throw InvalidArgument("schema violation: report has no checks");
  if (format == ReportFormat::json) {
    sink << report_json(report, timings).dump(2) << "\n";
  } else {
    std::size_t width = 5;
    for (const auto& c : report.checks()) width = std::max(width, c.name.size());
    const auto& s = report.spec();
    sink << "spec: n=" << s.n << " r=" << s.r << " p=" << s.p << " u=" << s.u << "\n";
    sink << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(20) << "status"
         << std::right << std::setw(8) << "ms" << "  detail\n";
    for (const auto& c : report.checks())
      sink << std::left << std::setw(static_cast<int>(width) + 2) << c.name << std::setw(20) << to_string(c.status)
           << std::right << std::setw(8) << (timings ? c.ms : 0) << "  " << c.detail << "\n";
    sink << "overall: " << (report.overall_pass() ? "pass" : "fail") << "\n";
  }
  sink.flush();
  if (!sink) throw Error("sink write failure");
}

}  // namespace lmv
