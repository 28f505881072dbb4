// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmv/local_model.hpp"
#include "lmv/scheme.hpp"
#include "lmv/text.hpp"

namespace {

using namespace lmv;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << " [failed: " << what << "]";
    }
  }

  // Runs body, failing the criterion if it throws or exceeds `limit` seconds.
  void timed(const std::string& what, double limit, const std::function<bool()>& body) {
    const auto start = Clock::now();
    bool result = false;
    try {
      result = body();
    } catch (const std::exception& e) {
      log << " [" << what << " threw: " << e.what() << "]";
      ok = false;
      return;
    }
    const double s = seconds_since(start);
    expect(result, what);
    expect(s <= limit, what + " took " + std::to_string(s) + " s > " + std::to_string(limit) + " s");
  }
};

int failures = 0;

void report(int number, const std::string& title, Criterion& c, Clock::time_point start) {
  std::printf("%s criterion %d: %s (%.2f s)%s\n", c.ok ? "PASS" : "FAIL", number, title.c_str(), seconds_since(start),
              c.log.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

const ChartId kCharts[] = {ChartId::t1, ChartId::t2, ChartId::t3};

void criterion_witness() {
  const auto start = Clock::now();
  Criterion c;
  for (int n : {4, 5})
    for (std::uint32_t p : {3U, 5U})
      for (ChartId chart : kCharts) {
        const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " " + to_string(chart);
        c.timed(tag, 10.0, [&] {
          const auto r = semistable_witness_details(n, chart, p, 1);
          return r.witness_rational && r.witness_mod_p;
        });
      }
  report(1, "semistable witness lies in each chart ideal", c, start);
}

void criterion_reducedness() {
  const auto start = Clock::now();
  Criterion c;
  for (int n : {4, 5})
    for (std::uint32_t p : {3U, 5U})
      for (ChartId chart : kCharts) {
        const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " " + to_string(chart);
        c.timed(tag, 60.0, [&] {
          return reduced_union_check(special_fiber_chart(n, chart, p), special_fiber_components(n, chart, p));
        });
      }
  report(2, "special fiber equals the intersection of its components", c, start);
}

void criterion_crossings() {
  const auto start = Clock::now();
  Criterion c;
  for (int n : {4, 5})
    for (ChartId chart : kCharts) {
      const std::string tag = "n=" + std::to_string(n) + " " + to_string(chart);
      c.timed(tag, 300.0, [&] {
        const auto comps = special_fiber_components(n, chart, 3);
        if (comps.size() != 3) return false;
        const int top = 2 * (n - 2);
        const auto rep = crossings_check(comps, top, comps.front().ring()->variables());
        bool ok = rep.records.size() == 7;
        for (const auto& rec : rep.records) {
          const int expected = rec.subset.size() == 1 ? top : rec.subset.size() == 2 ? 2 * n - 5 : 2 * n - 6;
          ok = ok && rec.status == SmoothnessStatus::smooth && rec.dimension == expected;
        }
        return ok;
      });
    }
  c.expect(seconds_since(start) <= 300.0, "total time within 5 min");
  report(3, "components and their crossings are smooth of the expected dimensions", c, start);
}

void criterion_strict_transform() {
  const auto start = Clock::now();
  Criterion c;
  for (int n : {4, 5})
    for (ChartId chart : kCharts)
      c.timed("n=" + std::to_string(n) + " " + to_string(chart), 60.0,
              [&] { return strict_transform_details(n, chart).strict_transform_equal; });
  report(4, "strict transform equals the chart ideal", c, start);
}

void criterion_chart_reduction() {
  const auto start = Clock::now();
  Criterion c;
  for (auto [n, r] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}})
    c.timed("(" + std::to_string(n) + "," + std::to_string(r) + ")", 120.0,
            [n = n, r = r] { return verify_chart_reduction(n, r); });
  report(5, "raw and reduced chart presentations agree", c, start);
}

void criterion_kraemer() {
  const auto start = Clock::now();
  Criterion c;
  for (int n : {3, 4, 5})
    for (std::uint32_t p : {3U, 5U})
      c.timed("n=" + std::to_string(n) + " p=" + std::to_string(p), 10.0, [&] {
        const auto chart = kraemer_chart(n, p, 1);
        const RingPtr fiber = special_fiber_ring(*chart.ring, p);
        auto fi = [&](const MixedPoly& f) { return FiberIdeal(fiber, {to_special_fiber(f, fiber)}); };
        const std::vector comps{fi(chart.roles.at("a")), fi(chart.roles.at("Q"))};
        const auto rep = crossings_check(comps, n - 1, fiber->variables());
        bool ok = rep.pass && rep.records.size() == 3 && rep.records[0].dimension == n - 1 &&
                  rep.records[1].dimension == n - 1 && rep.records[2].dimension == n - 2;
        ok = ok && reduced_union_check(fi(chart.ideal.generators().front()), comps);
        const auto witness = chart.roles.at("a") * chart.roles.at("Q") -
                             parse_polynomial<Rational>("2*pi", chart.ring);
        return ok && chart.ideal.contains(witness);
      });
  report(6, "signature (1, n-1): two smooth components crossing smoothly", c, start);
}

void criterion_strata() {
  const auto start = Clock::now();
  Criterion c;
  for (int n : {4, 5}) {
    const std::string tag = "n=" + std::to_string(n);
    const auto s = wedge_fiber_strata(n, 3);
    const auto& vars = s.fiber.ring()->variables();
    c.timed(tag + " T0 dimension", 300.0, [&] { return krull_dimension(s.t0) == 2 * (n - 2); });
    c.timed(tag + " T0+T2 smooth", 300.0, [&] {
      const auto v = smoothness_check(prune_generators(ideal_sum(s.t0, s.t2)), vars, 2 * n - 7);
      return v.status == SmoothnessStatus::smooth && v.dimension == 2 * n - 7;
    });
    c.timed(tag + " T1 singular", 300.0,
            [&] { return smoothness_check(s.t1_candidate, vars, 2 * (n - 2)).status == SmoothnessStatus::singular; });
    std::optional<FiberIdeal> meet;
    c.timed(tag + " strata cover", 300.0, [&] {
      meet = intersect(std::vector{s.t0, s.t1_candidate, s.t2});
      bool ok = true;
      for (const auto& g : meet->generators()) ok = ok && radical_membership(g, s.fiber);
      for (const auto* t : {&s.t0, &s.t1_candidate, &s.t2}) ok = ok && ideal_contained(s.fiber, *t);
      return ok;
    });
    // informational only
    if (meet) c.log << " [" << tag << " fiber = T0 n T1 n T2: " << (ideal_equal(s.fiber, *meet) ? "yes" : "no") << "]";
  }
  c.expect(seconds_since(start) <= 300.0, "total time within 5 min");
  report(7, "strata of the base chart special fiber", c, start);
}

void criterion_generic_fiber() {
  const auto start = Clock::now();
  Criterion c;
  for (ChartId chart : kCharts)
    c.timed(to_string(chart), 120.0, [&] {
      const auto I = generic_fiber_chart(4, chart, 3, 1);
      const auto v = smoothness_check(I, I.ring()->variables(), 4);
      return v.status == SmoothnessStatus::smooth && v.dimension == 4;
    });
  report(8, "generic fiber of each chart is smooth of dimension 2(n-2)", c, start);
}

// ---- engine property suites -------------------------------------------------

RingPtr qq(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring_context(std::move(vars), order, FieldDescriptor::rationals(), PiMode::absent);
}

template <CoefficientField K>
std::vector<std::string> texts(const std::vector<Polynomial<K>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

template <CoefficientField K>
Ideal<K> ideal_of(const RingPtr& ring, std::initializer_list<const char*> src) {
  std::vector<Polynomial<K>> gens;
  for (const char* s : src) gens.push_back(parse_polynomial<K>(s, ring));
  return Ideal<K>(ring, std::move(gens));
}

bool determinism() {
  std::mt19937_64 rng(3);
  std::vector<std::pair<RingPtr, std::vector<MixedPoly>>> cases;
  const auto r1 = qq({"x", "y", "z"});
  cases.emplace_back(r1, ideal_of<Rational>(r1, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}).generators());
  for (ChartId c : kCharts) {
    const auto chart = blowup_chart(4, c);
    cases.emplace_back(chart.ring, chart.ideal.generators());
  }
  for (auto& [ring, gens] : cases) {
    const auto reference = texts(reduced_groebner_basis(gens, ring));
    for (int k = 0; k < 4; ++k) {
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      GroebnerOptions options;
      options.shuffle_seed = rng();
      if (texts(reduced_groebner_basis(shuffled, ring, options)) != reference) return false;
    }
  }
  return true;
}

bool s_polynomial_certificate() {
  std::vector<std::vector<MixedPoly>> bases;
  const auto r1 = qq({"x", "y", "z"});
  const auto gens = ideal_of<Rational>(r1, {"x^2*y - z", "x*y^2 - x", "y*z - x^3"}).generators();
  bases.push_back(reduced_groebner_basis(gens, r1));
  for (ChartId c : kCharts) bases.push_back(blowup_chart(4, c).ideal.groebner_basis());
  for (const auto& gb : bases)
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j)
        if (!normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero()) return false;
  return true;
}

std::uint64_t eval_mod(const Polynomial<ModP>& f, const std::vector<std::uint64_t>& pt, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coefficient.value();
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) v = v * pt[i] % p;
    acc = (acc + v) % p;
  }
  return acc;
}

bool vanishes(const Ideal<ModP>& I, const std::vector<std::uint64_t>& pt, std::uint64_t p) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const auto& g) { return eval_mod(g, pt, p) == 0; });
}

Polynomial<ModP> random_mod_poly(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t p, unsigned max_exp = 2) {
  std::uniform_int_distribution<unsigned> e(0, max_exp), c(0, p - 1);
  std::vector<Term<ModP>> terms;
  for (int i = 0; i < 3; ++i) {
    std::vector<unsigned> ex;
    for (std::size_t v = 0; v < ring->size(); ++v) ex.push_back(e(rng));
    terms.push_back({Monomial(ex), ModP(c(rng), p)});
  }
  return Polynomial<ModP>::from_terms(ring, terms);
}

bool ideal_operation_oracles() {
  bool ok = true;
  const auto r2 = qq({"x", "y"});
  const auto r3 = qq({"x", "y", "z"});
  auto P = [](const char* s, const RingPtr& r) { return parse_polynomial<Rational>(s, r); };
  // hand examples
  ok = ok && ideal_equal(intersect(ideal_of<Rational>(r2, {"x"}), ideal_of<Rational>(r2, {"y"})),
                         ideal_of<Rational>(r2, {"x*y"}));
  const auto I = ideal_of<Rational>(r3, {"x*y - z", "y^2"});
  ok = ok && ideal_equal(intersect(I, ideal_of<Rational>(r3, {"1"})), I);
  ok = ok && ideal_equal(saturate(ideal_of<Rational>(r2, {"x^2*y"}), P("x", r2)), ideal_of<Rational>(r2, {"y"}));
  const auto s = saturate(ideal_of<Rational>(r3, {"x*z - y^2*z", "x^3*y - z^2"}), P("z", r3));
  ok = ok && ideal_equal(saturate(s, P("z", r3)), s);
  ok = ok && ideal_equal(eliminate(ideal_of<Rational>(r3, {"y - x^2", "z - x^3"}), 1),
                         ideal_of<Rational>(r3, {"y^3 - z^2"}));
  ok = ok && eliminate(ideal_of<Rational>(r2, {"x - 1"}), 1).is_zero();
  ok = ok && radical_membership(P("x + y", r2), ideal_of<Rational>(r2, {"x^2", "y^2"}));
  // brute force over GF(3): V(I n J) = V(I) u V(J), projections land in the eliminant
  const std::uint32_t p = 3;
  const auto f3 = make_ring_context({"x", "y", "z"}, MonomialOrder::grevlex(), FieldDescriptor::prime_field(p),
                                    PiMode::absent);
  std::vector<std::vector<std::uint64_t>> points;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c) points.push_back({a, b, c});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15 && ok; ++trial) {
    const Ideal<ModP> A(f3, {random_mod_poly(f3, rng, p), random_mod_poly(f3, rng, p)});
    const Ideal<ModP> B(f3, {random_mod_poly(f3, rng, p), random_mod_poly(f3, rng, p)});
    const auto meet = intersect(A, B);
    const auto elim = eliminate(A, 1);
    const auto sat = saturate(A, Polynomial<ModP>::variable(f3, "z"));
    for (const auto& pt : points) {
      ok = ok && vanishes(meet, pt, p) == (vanishes(A, pt, p) || vanishes(B, pt, p));
      if (vanishes(A, pt, p)) ok = ok && vanishes(elim, pt, p);
      if (vanishes(A, pt, p) && pt[2] != 0) ok = ok && vanishes(sat, pt, p);
    }
  }
  return ok;
}

int sign(int v) { return (v > 0) - (v < 0); }

int order_oracle(const MonomialOrder& order, const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  auto grevlex = [&](std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) da += a[i], db += b[i];
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  };
  switch (order.kind()) {
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Kind::grevlex: return grevlex(0, a.size());
    case MonomialOrder::Kind::block: {
      const int head = grevlex(0, order.block_size());
      return head != 0 ? head : grevlex(order.block_size(), a.size());
    }
  }
  return 0;
}

bool order_axioms() {
  std::vector<std::vector<unsigned>> exps;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      for (unsigned c = 0; a + b + c <= 4; ++c) exps.push_back({a, b, c});
  if (exps.size() != 35) return false;
  std::vector<Monomial> mons;
  for (const auto& e : exps) mons.emplace_back(e);
  for (const auto& order :
       {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1), MonomialOrder::block(2)}) {
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (!mons[i].is_one() && !order.greater(mons[i], Monomial(3))) return false;
      for (std::size_t j = 0; j < mons.size(); ++j) {
        const int c = sign(order.compare(mons[i], mons[j]));
        if (c != order_oracle(order, exps[i], exps[j])) return false;
        if ((c == 0) != (i == j)) return false;
        for (std::size_t k = 0; k < mons.size(); ++k) {
          if (mons[k].degree() <= 2 && sign(order.compare(mons[i] * mons[k], mons[j] * mons[k])) != c) return false;
          if (c > 0 && order.greater(mons[j], mons[k]) && !order.greater(mons[i], mons[k])) return false;
        }
      }
    }
  }
  return true;
}

bool product_rule_and_evaluation() {
  const std::uint32_t p = 101;
  const auto ring = make_ring_context({"x", "y", "z"}, MonomialOrder::grevlex(), FieldDescriptor::prime_field(p),
                                      PiMode::absent);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint64_t> coord(0, p - 1);
  const char* names[] = {"x", "y", "z"};
  for (int k = 0; k < 1000; ++k) {
    const auto f = random_mod_poly(ring, rng, p, 3), g = random_mod_poly(ring, rng, p, 3);
    const char* v = names[k % 3];
    if (!(differentiate(f * g, v) == differentiate(f, v) * g + f * differentiate(g, v))) return false;
  }
  for (int k = 0; k < 1000; ++k) {
    const auto f = random_mod_poly(ring, rng, p, 3), g = random_mod_poly(ring, rng, p, 3);
    const std::vector<std::uint64_t> pt{coord(rng), coord(rng), coord(rng)};
    std::map<std::string, ModP> at{{"x", ModP(pt[0], p)}, {"y", ModP(pt[1], p)}, {"z", ModP(pt[2], p)}};
    const ModP ef = evaluate(f, at), eg = evaluate(g, at);
    if (ef.value() != eval_mod(f, pt, p)) return false;
    if (!(evaluate(f * g, at) == ef * eg) || !(evaluate(f + g, at) == ef + eg)) return false;
  }
  return true;
}

void criterion_engine() {
  const auto start = Clock::now();
  Criterion c;
  c.timed("determinism", 60.0, determinism);
  c.timed("S-polynomial certificate", 60.0, s_polynomial_certificate);
  c.timed("ideal operation oracles", 60.0, ideal_operation_oracles);
  c.timed("monomial order axioms", 60.0, order_axioms);
  c.timed("product rule and evaluation", 60.0, product_rule_and_evaluation);
  c.expect(seconds_since(start) <= 60.0, "total time within 1 min");
  report(9, "engine property suites", c, start);
}

}  // namespace

int main() {
  criterion_witness();
  criterion_reducedness();
  criterion_crossings();
  criterion_strict_transform();
  criterion_chart_reduction();
  criterion_kraemer();
  criterion_strata();
  criterion_generic_fiber();
  criterion_engine();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
