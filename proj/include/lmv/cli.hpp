#pragma once

// Command-line front end. `run` is the whole program; tools/lmv.cpp only
// forwards argv. Exit codes: 0 success, 1 a check failed, 2 usage or
// parameter error, 3 resource exhaustion. Failures print one line
// "error: <kind>: <message>" on the error stream.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmv/io.hpp"
#include "lmv/local_model.hpp"
#include "lmv/pipeline.hpp"
#include "lmv/scheme.hpp"

namespace lmv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kExhausted = 3 };

inline const char* error_kind(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const UnknownVariable*>(&e)) return "unknown-variable";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
  if (dynamic_cast<const NotRepresentable*>(&e)) return "not-representable";
  if (dynamic_cast<const FieldMismatch*>(&e)) return "field-mismatch";
  if (dynamic_cast<const ContextMismatch*>(&e)) return "context-mismatch";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "division-by-zero";
  if (dynamic_cast<const IoError*>(&e)) return "io";
  return "error";
}

/// 0 when everything non-informational passed, 3 when any failure was an
/// exhausted pair budget, 1 otherwise.
inline int report_exit_code(const VerificationReport& report) {
  bool failed = false;
  for (const auto& c : report.checks()) {
    if (c.status != CheckStatus::fail) continue;
    if (c.detail.starts_with("resource-exhausted")) return kExhausted;
    failed = true;
  }
  return failed ? kCheckFailed : kOk;
}

inline std::vector<ChartId> parse_chart_list(const std::string& text) {
  std::vector<ChartId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const ChartId c = parse_chart_id(item);
    if (c == ChartId::base) throw InvalidArgument("invalid chart id 'base' for a blow-up chart");
    if (std::find(out.begin(), out.end(), c) != out.end()) throw InvalidArgument("chart '" + item + "' listed twice");
    out.push_back(c);
  }
  if (out.empty()) throw InvalidArgument("empty chart list");
  return out;
}

namespace detail {

struct Common {
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;
};

class Session {
 public:
  explicit Session(const Common& common) {
    options.max_pairs = common.max_pairs;
    if (const char* dir = std::getenv("LMV_CACHE_DIR"); dir != nullptr && *dir != '\0') {
      options.store = std::make_shared<DiskBasisStore>(dir);
    } else {
      temp_ = std::make_unique<TempDirectory>();
      options.store = std::make_shared<DiskBasisStore>(temp_->path());
    }
  }
  GroebnerOptions options;

 private:
  std::unique_ptr<TempDirectory> temp_;
};

inline int write_report(const VerificationReport& report, const std::string& format, const std::string& out_path,
                        bool timings, std::ostream& out) {
  const ReportFormat fmt = parse_report_format(format);
  if (out_path.empty()) {
    emit_report(report, fmt, out, timings);
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + out_path + "'");
    emit_report(report, fmt, file, timings);
  }
  return report_exit_code(report);
}

inline IdealFile chart_fiber(const ChartPresentation<Rational>& chart, const std::string& fiber, std::uint32_t p) {
  if (fiber == "mixed") return IdealFile::from_ideal(chart.ideal);
  if (fiber == "special") {
    const RingPtr ring = special_fiber_ring(*chart.ring, p);
    std::vector<Polynomial<ModP>> gens;
    for (const auto& g : chart.ideal.generators()) gens.push_back(to_special_fiber(g, ring));
    return IdealFile::from_polynomials(ring, gens);
  }
  throw InvalidArgument("unknown fiber '" + fiber + "' (expected special or mixed)");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-basis verifier for chart ideals of unitary local models", "lmv"};
  app.require_subcommand(1);
  detail::Common common;
  app.add_option("--max-pairs", common.max_pairs, "Pair budget for each Groebner computation")
      ->check(CLI::PositiveNumber);

  int n = 0, r = 2;
  std::uint32_t p = 3, u = 1;
  std::string charts = "t1,t2,t3", format = "text", out_path, which = "base", fiber = "mixed", input, order, op;
  std::vector<std::string> args;
  bool no_timings = false, raw = false;

  auto* verify = app.add_subcommand("verify", "Semistable-reduction checks for signature (2, n-2)");
  verify->add_option("--n", n, "Dimension n")->required();
  verify->add_option("--p", p, "Residue characteristic (odd prime)")->required();
  verify->add_option("--u", u, "Unit u with pi^2 = p*u");
  verify->add_option("--charts", charts, "Comma-separated subset of t1,t2,t3");
  verify->add_option("--format", format, "json or text");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_flag("--no-timings", no_timings, "Print 0 for every elapsed time");

  auto* kraemer = app.add_subcommand("kraemer", "Checks for signature (1, n-1)");
  kraemer->add_option("--n", n, "Dimension n")->required();
  kraemer->add_option("--p", p, "Residue characteristic (odd prime)")->required();
  kraemer->add_option("--u", u, "Unit u with pi^2 = p*u");
  kraemer->add_option("--format", format, "json or text");
  kraemer->add_option("--out", out_path, "Write the report here instead of stdout");
  kraemer->add_flag("--no-timings", no_timings, "Print 0 for every elapsed time");

  auto* chart = app.add_subcommand("chart", "Print a chart ideal as an ideal file");
  chart->add_option("--n", n, "Dimension n")->required();
  chart->add_option("--r", r, "Signature r (default 2)");
  chart->add_option("--which", which, "base, t1, t2 or t3");
  chart->add_option("--fiber", fiber, "special or mixed");
  chart->add_option("--p", p, "Residue characteristic for the special fiber");
  chart->add_option("--u", u, "Unit u with pi^2 = p*u");
  chart->add_flag("--raw", raw, "Base chart before eliminating Z2 and the lower half of Z1");

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("--input", input, "Ideal file")->required();
  gb->add_option("--order", order, "Override the order: grevlex, lex or block:K");

  auto* check = app.add_subcommand("check", "Single engine operation on an ideal file");
  check->add_option("--input", input, "Ideal file")->required();
  check->add_option("--op", op, "membership, dimension or smooth")->required();
  check->add_option("--args", args, "membership: polynomial; smooth: expected dimension [variables...]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    detail::Session session(common);
    const GroebnerOptions& options = session.options;

    if (verify->parsed())
      return detail::write_report(verify_semistability(n, p, u, parse_chart_list(charts), options), format, out_path,
                                  !no_timings, out);

    if (kraemer->parsed())
      return detail::write_report(kraemer_pipeline(n, p, u, options), format, out_path, !no_timings, out);

    if (chart->parsed()) {
      FieldDescriptor::quadratic_extension(p, u);
      const ChartId id = parse_chart_id(which);
      ChartPresentation<Rational> presentation = [&] {
        if (raw) {
          if (id != ChartId::base) throw InvalidArgument("--raw applies to the base chart only");
          return general_chart_raw(n, r);
        }
        if (id != ChartId::base) {
          if (r != 2) throw InvalidArgument("blow-up charts exist for r = 2 only");
          return blowup_chart(n, id);
        }
        if (r == 1) return kraemer_chart(n, p, u);
        if (r == 2) return signature2_chart(n, p, u);
        return general_chart_reduced(n, r);
      }();
      out << detail::chart_fiber(presentation, fiber, p).dump();
      return kOk;
    }

    const IdealFile file = IdealFile::load(input);
    RingPtr ring = file.ring();
    if (!order.empty()) ring = with_order(ring, MonomialOrder::parse(order));

    if (gb->parsed()) {
      return dispatch_field(ring->field(), [&]<class K>() {
        const Ideal<K> ideal = file.ideal<K>(ring, options);
        out << IdealFile::from_polynomials(ring, ideal.groebner_basis()).dump();
        return static_cast<int>(kOk);
      });
    }

    // check
    return dispatch_field(ring->field(), [&]<class K>() -> int {
      const Ideal<K> ideal = file.ideal<K>(ring, options);
      if (op == "membership") {
        if (args.size() != 1) throw InvalidArgument("membership takes exactly one polynomial argument");
        const bool member = ideal.contains(parse_polynomial<K>(args[0], ring));
        out << (member ? "member" : "not-member") << "\n";
        return member ? kOk : kCheckFailed;
      }
      if (op == "dimension") {
        if (!args.empty()) throw InvalidArgument("dimension takes no arguments");
        out << krull_dimension(ideal) << "\n";
        return kOk;
      }
      if (op == "smooth") {
        if (args.empty()) throw InvalidArgument("smooth takes an expected dimension and optional variables");
        int expected = 0;
        try {
          std::size_t used = 0;
          expected = std::stoi(args[0], &used);
          if (used != args[0].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw InvalidArgument("expected dimension must be an integer, got '" + args[0] + "'");
        }
        std::vector<std::string> vars(args.begin() + 1, args.end());
        if (vars.empty()) vars = ring->variables();
        const auto v = smoothness_check(ideal, vars, expected);
        out << to_string(v.status) << " dim " << v.dimension;
        if (!v.notes.empty()) out << " (" << v.notes << ")";
        out << "\n";
        return v.status == SmoothnessStatus::smooth ? kOk : kCheckFailed;
      }
      throw InvalidArgument("unknown op '" + op + "' (expected membership, dimension or smooth)");
    });
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExhausted;
  } catch (const Error& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace lmv::cli
