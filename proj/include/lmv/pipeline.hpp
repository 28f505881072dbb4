#pragma once

// Batch verification: semistable reduction of the signature (2, n-2) blow-up
// chart by chart, the strata of the unblown-up special fiber, and the
// signature (1, n-1) case.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lmv/local_model.hpp"
#include "lmv/report.hpp"
#include "lmv/scheme.hpp"

namespace lmv {

namespace detail {

template <CoefficientField K>
std::string describe_crossings(const CrossingsReport<K>& report, bool pairs_and_up) {
  std::ostringstream out;
  bool first = true;
  for (const auto& rec : report.records) {
    if ((rec.subset.size() > 1) != pairs_and_up) continue;
    if (!first) out << "; ";
    first = false;
    for (std::size_t i = 0; i < rec.subset.size(); ++i) out << (i ? "+" : "") << "I" << rec.subset[i] + 1;
    out << " " << to_string(rec.status) << " dim " << rec.dimension << " (expected " << rec.expected_dimension << ")";
  }
  return out.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Charts default to all three.
inline VerificationReport verify_semistability(int n, std::uint32_t p, std::uint32_t u,
                                               std::vector<ChartId> charts = {ChartId::t1, ChartId::t2, ChartId::t3},
                                               const GroebnerOptions& options = {}) {
  if (n < 4 || n > 6) throw InvalidArgument("n must lie in [4, 6] for the signature (2, n-2) pipeline");
  FieldDescriptor::quadratic_extension(p, u);
  const int top = 2 * (n - 2);
  VerificationReport report(ReportSpec{n, 2, p, u});

  for (ChartId chart : charts) {
    if (chart == ChartId::base) throw InvalidArgument("invalid chart id 'base' for a blow-up chart");
    const std::string tag = to_string(chart) + "/";

    report.run(tag + "strict-transform", false, [&] {
      const auto r = strict_transform_details(n, chart, options);
      return std::pair{r.pass(), "saturated total transform equals chart ideal: " +
                                     detail::yes_no(r.strict_transform_equal) +
                                     "; simplified generator gives same ideal: " +
                                     detail::yes_no(r.simplification_equal)};
    });

    report.run(tag + "special-fiber", false, [&] {
      const FiberIdeal jbar = special_fiber_chart(n, chart, p, options);
      const int dim = krull_dimension(jbar);
      return std::pair{dim == top, "dimension " + std::to_string(dim) + " (expected " + std::to_string(top) + ")"};
    });

    std::optional<CrossingsReport<ModP>> crossings;
    report.run(tag + "components", false, [&] {
      const auto comps = special_fiber_components(n, chart, p, options);
      crossings = crossings_check(comps, top, comps.front().ring()->variables());
      bool ok = true;
      for (const auto& rec : crossings->records)
        if (rec.subset.size() == 1) ok = ok && rec.pass;
      return std::pair{ok, detail::describe_crossings(*crossings, false)};
    });

    report.run(tag + "crossings", false, [&] {
      if (!crossings) return std::pair{false, std::string("components unavailable")};
      bool ok = true;
      for (const auto& rec : crossings->records)
        if (rec.subset.size() > 1) ok = ok && rec.pass;
      return std::pair{ok, detail::describe_crossings(*crossings, true)};
    });

    report.run(tag + "reduced-union", false, [&] {
      const bool ok = reduced_union_check(special_fiber_chart(n, chart, p, options),
                                          special_fiber_components(n, chart, p, options));
      return std::pair{ok, std::string(ok ? "special fiber equals the intersection of I1, I2, I3"
                                          : "special fiber differs from the intersection of I1, I2, I3")};
    });

    report.run(tag + "witness", false, [&] {
      const auto r = semistable_witness_details(n, chart, p, u, options);
      std::string principal;
      for (std::size_t i = 0; i < r.principal.size(); ++i)
        principal += (i ? "," : "") + detail::yes_no(r.principal[i]);
      return std::pair{r.pass(), "witness in chart ideal over QQ: " + detail::yes_no(r.witness_rational) +
                                     ", over GF(" + std::to_string(p) + "): " + detail::yes_no(r.witness_mod_p) +
                                     "; components principal: " + principal};
    });

    report.run(tag + "generic-fiber", false, [&] {
      const auto ideal = generic_fiber_chart(n, chart, p, u, options);
      const auto v = smoothness_check(ideal, ideal.ring()->variables(), top);
      std::string detail = to_string(v.status) + " dim " + std::to_string(v.dimension) + " over " +
                           ideal.ring()->field().to_string();
      if (!v.notes.empty()) detail += " (" + v.notes + ")";
      return std::pair{v.status == SmoothnessStatus::smooth && v.dimension == top, detail};
    });
  }

  const WedgeStrata strata = wedge_fiber_strata(n, p, options);
  const auto& vars = strata.fiber.ring()->variables();

  report.run("base/T0-dimension", false, [&] {
    const int dim = krull_dimension(strata.t0);
    return std::pair{dim == top, "dimension " + std::to_string(dim) + " (expected " + std::to_string(top) + ")"};
  });

  report.run("base/T0+T2-smooth", false, [&] {
    const int expected = 2 * n - 7;
    const auto v = smoothness_check(prune_generators(ideal_sum(strata.t0, strata.t2)), vars, expected);
    return std::pair{v.status == SmoothnessStatus::smooth && v.dimension == expected,
                     to_string(v.status) + " dim " + std::to_string(v.dimension) + " (expected " +
                         std::to_string(expected) + ")"};
  });

  report.run("base/T1-singular", false, [&] {
    const auto v = smoothness_check(strata.t1_candidate, vars, top);
    std::string detail = to_string(v.status) + " dim " + std::to_string(v.dimension);
    if (!v.notes.empty()) detail += " (" + v.notes + ")";
    return std::pair{v.status == SmoothnessStatus::singular, detail};
  });

  const std::vector<FiberIdeal> strata_list{strata.t0, strata.t1_candidate, strata.t2};
  std::optional<FiberIdeal> strata_meet;
  report.run("base/strata-cover", false, [&] {
    strata_meet = intersect(strata_list);
    bool inside = true;
    for (const auto& g : strata_meet->generators()) inside = inside && radical_membership(g, strata.fiber);
    bool contained = true;
    for (const auto& t : strata_list) contained = contained && ideal_contained(strata.fiber, t);
    return std::pair{inside && contained, "intersection in radical of fiber: " + detail::yes_no(inside) +
                                              "; fiber inside each stratum: " + detail::yes_no(contained)};
  });

  report.run("base/reducedness-conjecture", true, [&] {
    if (!strata_meet) strata_meet = intersect(strata_list);
    const bool ok = ideal_equal(strata.fiber, *strata_meet);
    return std::pair{ok, std::string(ok ? "fiber ideal equals the intersection of T0, T1, T2"
                                        : "fiber ideal differs from the intersection of T0, T1, T2")};
  });

  return report;
}

/// Signature (1, n-1): the special fiber is (a) ∪ (Q̄).
inline VerificationReport kraemer_pipeline(int n, std::uint32_t p, std::uint32_t u,
                                           const GroebnerOptions& options = {}) {
  const auto chart = kraemer_chart(n, p, u);
  VerificationReport report(ReportSpec{n, 1, p, u});
  const RingPtr fiber = special_fiber_ring(*chart.ring, p);
  auto fiber_ideal = [&](const MixedPoly& f) { return FiberIdeal(fiber, {to_special_fiber(f, fiber)}, options); };
  const FiberIdeal jbar = fiber_ideal(chart.ideal.generators().front());
  const std::vector<FiberIdeal> comps{fiber_ideal(chart.roles.at("a")), fiber_ideal(chart.roles.at("Q"))};

  std::optional<CrossingsReport<ModP>> crossings;
  report.run("components", false, [&] {
    crossings = crossings_check(comps, n - 1, fiber->variables());
    bool ok = true;
    for (const auto& rec : crossings->records)
      if (rec.subset.size() == 1) ok = ok && rec.pass;
    return std::pair{ok, detail::describe_crossings(*crossings, false)};
  });

  report.run("crossing", false, [&] {
    if (!crossings) return std::pair{false, std::string("components unavailable")};
    bool ok = true;
    for (const auto& rec : crossings->records)
      if (rec.subset.size() > 1) ok = ok && rec.pass;
    return std::pair{ok, detail::describe_crossings(*crossings, true)};
  });

  report.run("reduced-union", false, [&] {
    const bool ok = reduced_union_check(jbar, comps);
    return std::pair{ok, std::string(ok ? "special fiber equals the intersection of (a), (Q)"
                                        : "special fiber differs from the intersection of (a), (Q)")};
  });

  report.run("witness", false, [&] {
    const auto two_pi = MixedPoly::integer(chart.ring, 2) * MixedPoly::variable(chart.ring, kPiName);
    const bool ok = chart.ideal.contains(chart.roles.at("a") * chart.roles.at("Q") - two_pi);
    return std::pair{ok, "a*Q - 2*pi in chart ideal: " + detail::yes_no(ok)};
  });

  return report;
}

}  // namespace lmv
