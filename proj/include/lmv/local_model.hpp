#pragma once

// Chart ideals of the unitary local model with signature (r, n - r): the
// raw and reduced affine charts around the worst point, the signature
// (2, n - 2) chart B = O_F[x, y, a, b, c] / J, its blow-up along (a, b, c)
// with the three affine charts t1 = 1, t2 = 1, t3 = 1, and the special-fiber
// components and strata used to certify semistable reduction.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lmv/error.hpp"
#include "lmv/fiber.hpp"
#include "lmv/ideal.hpp"
#include "lmv/text.hpp"

namespace lmv {

enum class ChartId { base, t1, t2, t3 };

inline std::string to_string(ChartId c) {
  switch (c) {
    case ChartId::base: return "base";
    case ChartId::t1: return "t1";
    case ChartId::t2: return "t2";
    case ChartId::t3: return "t3";
  }
  return "?";
}

inline ChartId parse_chart_id(std::string_view s) {
  if (s == "base") return ChartId::base;
  if (s == "t1") return ChartId::t1;
  if (s == "t2") return ChartId::t2;
  if (s == "t3") return ChartId::t3;
  throw InvalidArgument("invalid chart id '" + std::string(s) + "'");
}

struct ChartSpec {
  int n = 4;
  int r = 2;
  std::uint32_t p = 3;
  std::uint32_t u = 1;
  ChartId chart = ChartId::base;

  void validate() const {
    if (n < 3) throw InvalidArgument("n must be at least 3");
    if (r < 1 || r > n - r) throw InvalidArgument("signature requires 1 <= r <= n - r");
    FieldDescriptor::quadratic_extension(p, u);  // odd prime p, 1 <= u < p
  }
};

template <CoefficientField K>
struct ChartPresentation {
  RingPtr ring;
  Ideal<K> ideal;
  /// Named objects of the construction, e.g. "Q(x)", "P", "witness".
  std::map<std::string, Polynomial<K>> roles;
};

using MixedPoly = Polynomial<Rational>;
using MixedIdeal = Ideal<Rational>;
using FiberPoly = Polynomial<ModP>;
using FiberIdeal = Ideal<ModP>;

namespace detail {

inline void require_signature(int n, int r) {
  if (r < 1 || n < 2 || r > n - r) throw InvalidArgument("signature requires 1 <= r <= n - r (r <= s)");
}

inline void require_signature2(int n) {
  if (n < 4) throw InvalidArgument("signature (2, n-2) requires n >= 4 (r <= s)");
}

inline void require_prime_and_unit(std::uint64_t p, std::uint64_t u) { FieldDescriptor::quadratic_extension(p, u); }

inline std::string yname(int i, int j) { return "y_" + std::to_string(i) + "_" + std::to_string(j); }
inline std::string zname(int i, int j) { return "z_" + std::to_string(i) + "_" + std::to_string(j); }

inline std::vector<std::string> xy_variables(int n) {
  std::vector<std::string> v;
  for (int i = 3; i <= n; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 3; i <= n; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

/// Q(x) = 1 + Σ x_i², Q(y) = 1 + Σ y_i², P = Σ x_i y_i, i = 3..n.
struct Quadrics {
  MixedPoly qx, qy, p;
};

inline Quadrics quadrics(const RingPtr& ring, int n) {
  Quadrics q{MixedPoly::integer(ring, 1), MixedPoly::integer(ring, 1), MixedPoly(ring)};
  for (int i = 3; i <= n; ++i) {
    const auto x = MixedPoly::variable(ring, "x" + std::to_string(i));
    const auto y = MixedPoly::variable(ring, "y" + std::to_string(i));
    q.qx += x * x;
    q.qy += y * y;
    q.p += x * y;
  }
  return q;
}

inline MixedPoly var(const RingPtr& ring, std::string_view name) { return MixedPoly::variable(ring, name); }
inline MixedPoly num(const RingPtr& ring, long v) { return MixedPoly::integer(ring, v); }

inline RingPtr mixed_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  vars.emplace_back(kPiName);
  return make_ring_context(std::move(vars), order, FieldDescriptor::rationals(), PiMode::variable);
}

inline void add_unique_up_to_sign(std::vector<MixedPoly>& gens, const MixedPoly& g) {
  if (g.is_zero()) return;
  for (const auto& h : gens)
    if (h == g || h == -g) return;
  gens.push_back(g);
}

}  // namespace detail

/// Raw chart around the worst point: Y (n x r) with top block the identity,
/// Z (n x r) free, generators the entries of Z Yᵗ - Y Zᵗ and Y Zᵗ Y - 2πY.
/// Variables order the entries of Z₂ and the strictly lower part of Z₁ first,
/// under block order, so that they are eliminated first.
inline ChartPresentation<Rational> general_chart_raw(int n, int r) {
  detail::require_signature(n, r);
  std::vector<std::string> lead, tail;
  for (int i = r + 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j) lead.push_back(detail::zname(i, j));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < i; ++j) lead.push_back(detail::zname(i, j));
  for (int i = r + 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j) tail.push_back(detail::yname(i, j));
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) tail.push_back(detail::zname(i, j));
  const std::size_t block = lead.size();
  lead.insert(lead.end(), tail.begin(), tail.end());
  const RingPtr ring = detail::mixed_ring(std::move(lead), MonomialOrder::block(block));

  auto Y = [&](int i, int j) {  // 1-based
    if (i <= r) return detail::num(ring, i == j ? 1 : 0);
    return detail::var(ring, detail::yname(i, j));
  };
  auto Z = [&](int i, int j) { return detail::var(ring, detail::zname(i, j)); };
  const auto pi = detail::var(ring, kPiName);

  std::vector<MixedPoly> gens;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      MixedPoly e(ring);
      for (int j = 1; j <= r; ++j) e += Z(i, j) * Y(k, j) - Y(i, j) * Z(k, j);
      detail::add_unique_up_to_sign(gens, e);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j) {
      MixedPoly e = detail::num(ring, -2) * pi * Y(i, j);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= r; ++l) e += Y(i, l) * Z(k, l) * Y(k, j);
      detail::add_unique_up_to_sign(gens, e);
    }
  ChartPresentation<Rational> out{ring, MixedIdeal(ring, gens), {}};
  out.roles.emplace("pi", pi);
  return out;
}

/// Reduced chart: symmetric Z₁ (entries z_i_j, i <= j), Y₂ entries y_i_j
/// (i > r), generators the r² entries of Z₁(I + Y₂ᵗY₂) - 2πI.
inline ChartPresentation<Rational> general_chart_reduced(int n, int r) {
  detail::require_signature(n, r);
  std::vector<std::string> vars;
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) vars.push_back(detail::zname(i, j));
  for (int i = r + 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j) vars.push_back(detail::yname(i, j));
  const RingPtr ring = detail::mixed_ring(std::move(vars));
  auto Z1 = [&](int i, int j) { return detail::var(ring, detail::zname(std::min(i, j), std::max(i, j))); };
  auto Y2 = [&](int i, int j) { return detail::var(ring, detail::yname(i, j)); };
  const auto pi = detail::var(ring, kPiName);

  std::vector<MixedPoly> gens;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      MixedPoly e = i == j ? detail::num(ring, -2) * pi : MixedPoly(ring);
      for (int l = 1; l <= r; ++l) {
        MixedPoly m = detail::num(ring, l == j ? 1 : 0);
        for (int k = r + 1; k <= n; ++k) m += Y2(k, l) * Y2(k, j);
        e += Z1(i, l) * m;
      }
      gens.push_back(e);
    }
  ChartPresentation<Rational> out{ring, MixedIdeal(ring, gens), {}};
  out.roles.emplace("pi", pi);
  return out;
}

/// The raw ideal equals (Z₂ - Y₂Z₁ᵗ, Z₁ - Z₁ᵗ, Z₁(I + Y₂ᵗY₂) - 2πI) in the
/// raw ring.
inline bool verify_chart_reduction(int n, int r, GroebnerOptions options = {}) {
  const auto raw = general_chart_raw(n, r);
  const RingPtr& ring = raw.ring;
  auto Z = [&](int i, int j) { return detail::var(ring, detail::zname(i, j)); };
  auto Y2 = [&](int i, int j) { return detail::var(ring, detail::yname(i, j)); };
  const auto pi = detail::var(ring, kPiName);
  std::vector<MixedPoly> gens;
  for (int i = r + 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j) {
      MixedPoly e = Z(i, j);
      for (int l = 1; l <= r; ++l) e -= Y2(i, l) * Z(j, l);
      gens.push_back(e);
    }
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) gens.push_back(Z(i, j) - Z(j, i));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      MixedPoly e = i == j ? detail::num(ring, -2) * pi : MixedPoly(ring);
      for (int l = 1; l <= r; ++l) {
        MixedPoly m = detail::num(ring, l == j ? 1 : 0);
        for (int k = r + 1; k <= n; ++k) m += Y2(k, l) * Y2(k, j);
        e += Z(i, l) * m;
      }
      gens.push_back(e);
    }
  const MixedIdeal lhs(ring, raw.ideal.generators(), options);
  const MixedIdeal rhs(ring, std::move(gens), options);
  return ideal_equal(lhs, rhs);
}

/// Signature (2, n-2): entries of Z₁N - 2πI₂ with Z₁ = [[a, b], [b, c]] and
/// N = [[Q(x), P], [P, Q(y)]].
inline ChartPresentation<Rational> signature2_chart(int n, std::uint32_t p = 3, std::uint32_t u = 1) {
  detail::require_signature2(n);
  detail::require_prime_and_unit(p, u);
  auto vars = detail::xy_variables(n);
  for (const char* v : {"a", "b", "c"}) vars.emplace_back(v);
  const RingPtr ring = detail::mixed_ring(std::move(vars));
  const auto q = detail::quadrics(ring, n);
  const auto a = detail::var(ring, "a"), b = detail::var(ring, "b"), c = detail::var(ring, "c");
  const auto two_pi = detail::num(ring, 2) * detail::var(ring, kPiName);
  std::vector<MixedPoly> gens{a * q.qx + b * q.p - two_pi, a * q.p + b * q.qy, b * q.qx + c * q.p,
                              b * q.p + c * q.qy - two_pi};
  ChartPresentation<Rational> out{ring, MixedIdeal(ring, gens), {}};
  out.roles.emplace("Q(x)", q.qx);
  out.roles.emplace("Q(y)", q.qy);
  out.roles.emplace("P", q.p);
  out.roles.emplace("Z1-entry a", a);
  out.roles.emplace("Z1-entry b", b);
  out.roles.emplace("Z1-entry c", c);
  return out;
}

/// Signature (1, n-1): a(1 + Σ_{c>=2} y_c²) - 2π after setting y₁ = 1.
inline ChartPresentation<Rational> kraemer_chart(int n, std::uint32_t p = 3, std::uint32_t u = 1) {
  if (n < 3) throw InvalidArgument("the (1, n-1) chart requires n >= 3");
  detail::require_prime_and_unit(p, u);
  std::vector<std::string> vars;
  for (int i = 2; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  vars.emplace_back("a");
  const RingPtr ring = detail::mixed_ring(std::move(vars));
  MixedPoly q = detail::num(ring, 1);
  for (int i = 2; i <= n; ++i) {
    const auto y = detail::var(ring, "y" + std::to_string(i));
    q += y * y;
  }
  const auto a = detail::var(ring, "a");
  ChartPresentation<Rational> out{
      ring, MixedIdeal(ring, {a * q - detail::num(ring, 2) * detail::var(ring, kPiName)}), {}};
  out.roles.emplace("Q", q);
  out.roles.emplace("a", a);
  return out;
}

/// J' in B[t1, t2, t3]: six generators, each of degree one in t.
inline ChartPresentation<Rational> blowup_projective(int n) {
  detail::require_signature2(n);
  auto vars = detail::xy_variables(n);
  for (const char* v : {"a", "b", "c", "t1", "t2", "t3"}) vars.emplace_back(v);
  const RingPtr ring = detail::mixed_ring(std::move(vars));
  const auto q = detail::quadrics(ring, n);
  auto v = [&](const char* name) { return detail::var(ring, name); };
  const auto a = v("a"), b = v("b"), c = v("c"), t1 = v("t1"), t2 = v("t2"), t3 = v("t3");
  std::vector<MixedPoly> gens{t1 * q.qx - t3 * q.qy, t2 * q.qy + t1 * q.p, t2 * q.qx + t3 * q.p,
                              a * t2 - b * t1,       a * t3 - c * t1,       b * t3 - c * t2};
  ChartPresentation<Rational> out{ring, MixedIdeal(ring, gens), {}};
  out.roles.emplace("t1", t1);
  out.roles.emplace("t2", t2);
  out.roles.emplace("t3", t3);
  return out;
}

/// Everything attached to one affine chart of the blow-up, built over the
/// rationals with π a variable.
struct BlowupChartData {
  ChartId chart;
  RingPtr ring;
  std::string exceptional;                 // a, b or c
  std::map<std::string, std::string> relations;  // substitution of the base ring's a, b, c
  std::vector<MixedPoly> generators;       // the chart ideal
  MixedPoly alternate_third;               // equivalent third generator
  std::vector<std::vector<MixedPoly>> components;  // special-fiber components, π-free
  std::vector<MixedPoly> branches;         // principal equation of each component on the chart
  MixedPoly witness;                       // product of the branches minus 2π
};

inline BlowupChartData blowup_chart_data(int n, ChartId chart) {
  detail::require_signature2(n);
  if (chart == ChartId::base) throw InvalidArgument("invalid chart id 'base' for a blow-up chart");
  auto vars = detail::xy_variables(n);
  BlowupChartData d{chart, nullptr, "", {}, {}, MixedPoly(), {}, {}, MixedPoly()};
  switch (chart) {
    case ChartId::t1:
      for (const char* v : {"a", "t2", "t3"}) vars.emplace_back(v);
      d.exceptional = "a";
      d.relations = {{"b", "a*t2"}, {"c", "a*t3"}};
      break;
    case ChartId::t2:
      for (const char* v : {"b", "t1", "t3"}) vars.emplace_back(v);
      d.exceptional = "b";
      d.relations = {{"a", "b*t1"}, {"c", "b*t3"}};
      break;
    default:
      for (const char* v : {"c", "t1", "t2"}) vars.emplace_back(v);
      d.exceptional = "c";
      d.relations = {{"a", "c*t1"}, {"b", "c*t2"}};
      break;
  }
  d.ring = detail::mixed_ring(std::move(vars));
  const RingPtr& ring = d.ring;
  const auto q = detail::quadrics(ring, n);
  const auto one = detail::num(ring, 1);
  const auto two_pi = detail::num(ring, 2) * detail::var(ring, kPiName);
  const auto e = detail::var(ring, d.exceptional);

  if (chart == ChartId::t1) {
    const auto t2 = detail::var(ring, "t2"), t3 = detail::var(ring, "t3");
    const auto m1 = t2 * q.qy + q.p, m2 = q.qx - t3 * q.qy;
    d.generators = {m1, m2, e * (q.qx + t2 * q.p) - two_pi};
    d.alternate_third = e * (t3 - t2 * t2) * q.qy - two_pi;
    d.components = {{e, m1, m2}, {t3 - t2 * t2, m1, q.qx - t2 * t2 * q.qy}, {q.qy, q.p, q.qx}};
    d.branches = {e, t3 - t2 * t2, q.qy};
  } else if (chart == ChartId::t2) {
    const auto t1 = detail::var(ring, "t1"), t3 = detail::var(ring, "t3");
    const auto m1 = q.qy + t1 * q.p, m2 = q.qx + t3 * q.p;
    d.generators = {m1, m2, e * (one - t1 * t3) * q.p - two_pi};
    d.alternate_third = e * (t1 * q.qx + q.p) - two_pi;
    d.components = {{e, m1, m2}, {one - t1 * t3, m1, m2}, {q.p, q.qy, q.qx}};
    d.branches = {e, one - t1 * t3, q.p};
  } else {
    // Image of the t1 chart under x <-> y, a <-> c, t1 <-> t3.
    const auto t1 = detail::var(ring, "t1"), t2 = detail::var(ring, "t2");
    const auto m1 = t2 * q.qx + q.p, m2 = q.qy - t1 * q.qx;
    d.generators = {m1, m2, e * (q.qy + t2 * q.p) - two_pi};
    d.alternate_third = e * (t1 - t2 * t2) * q.qx - two_pi;
    d.components = {{e, m1, m2}, {t1 - t2 * t2, m1, q.qy - t2 * t2 * q.qx}, {q.qx, q.p, q.qy}};
    d.branches = {e, t1 - t2 * t2, q.qx};
  }
  d.witness = d.branches[0] * d.branches[1] * d.branches[2] - two_pi;
  return d;
}

inline ChartPresentation<Rational> blowup_chart(int n, ChartId chart) {
  const BlowupChartData d = blowup_chart_data(n, chart);
  const auto q = detail::quadrics(d.ring, n);
  ChartPresentation<Rational> out{d.ring, MixedIdeal(d.ring, d.generators), {}};
  out.roles.emplace("Q(x)", q.qx);
  out.roles.emplace("Q(y)", q.qy);
  out.roles.emplace("P", q.p);
  out.roles.emplace("witness", d.witness);
  out.roles.emplace("exceptional", detail::var(d.ring, d.exceptional));
  return out;
}

struct StrictTransformResult {
  bool strict_transform_equal = false;
  bool simplification_equal = false;
  bool pass() const { return strict_transform_equal && simplification_equal; }
};

/// Substitutes the chart relations into J, saturates by the exceptional
/// variable and compares with the chart ideal; also checks the alternate
/// third generator gives the same ideal.
inline StrictTransformResult strict_transform_details(int n, ChartId chart, GroebnerOptions options = {}) {
  const BlowupChartData d = blowup_chart_data(n, chart);
  const auto base = signature2_chart(n);
  std::map<std::string, MixedPoly> bindings;
  for (const auto& [name, image] : d.relations) bindings.emplace(name, parse_polynomial<Rational>(image, d.ring));
  std::vector<MixedPoly> total;
  for (const auto& g : base.ideal.generators()) total.push_back(substitute(g, bindings, d.ring));
  const MixedIdeal total_transform(d.ring, std::move(total), options);
  const MixedIdeal strict = saturate(total_transform, detail::var(d.ring, d.exceptional));
  const MixedIdeal chart_ideal(d.ring, d.generators, options);
  std::vector<MixedPoly> alt = d.generators;
  alt[2] = d.alternate_third;
  StrictTransformResult r;
  r.strict_transform_equal = ideal_equal(strict, chart_ideal);
  r.simplification_equal = ideal_equal(MixedIdeal(d.ring, std::move(alt), options), chart_ideal);
  return r;
}

inline bool strict_transform_check(int n, ChartId chart, GroebnerOptions options = {}) {
  return strict_transform_details(n, chart, std::move(options)).pass();
}

namespace detail {

inline FiberIdeal fiber_ideal(const RingPtr& fiber, const std::vector<MixedPoly>& gens,
                              const GroebnerOptions& options) {
  std::vector<FiberPoly> out;
  for (const auto& g : gens) out.push_back(to_special_fiber(g, fiber));
  return FiberIdeal(fiber, std::move(out), options);
}

}  // namespace detail

/// J̄ of a blow-up chart over GF(p).
inline FiberIdeal special_fiber_chart(int n, ChartId chart, std::uint32_t p, GroebnerOptions options = {}) {
  const BlowupChartData d = blowup_chart_data(n, chart);
  return detail::fiber_ideal(special_fiber_ring(*d.ring, p), d.generators, options);
}

/// The three components of J̄ in the displayed order.
inline std::vector<FiberIdeal> special_fiber_components(int n, ChartId chart, std::uint32_t p,
                                                        GroebnerOptions options = {}) {
  const BlowupChartData d = blowup_chart_data(n, chart);
  const RingPtr fiber = special_fiber_ring(*d.ring, p);
  std::vector<FiberIdeal> out;
  for (const auto& comp : d.components) out.push_back(detail::fiber_ideal(fiber, comp, options));
  return out;
}

struct WedgeStrata {
  FiberIdeal fiber;  // J̄ of the base chart
  FiberIdeal t0;
  FiberIdeal t2;
  FiberIdeal t1_candidate;
};

/// Strata of the base chart's special fiber: T0 = (a, b, c),
/// T2 = (Q(x), P, Q(y)), T1 candidate = J̄ + (ac - b², Q(x)Q(y) - P²).
inline WedgeStrata wedge_fiber_strata(int n, std::uint32_t p, GroebnerOptions options = {}) {
  const auto base = signature2_chart(n, p, 1);
  const RingPtr fiber = special_fiber_ring(*base.ring, p);
  const RingPtr& ring = base.ring;
  const auto q = detail::quadrics(ring, n);
  const auto a = detail::var(ring, "a"), b = detail::var(ring, "b"), c = detail::var(ring, "c");
  std::vector<MixedPoly> t1 = base.ideal.generators();
  t1.push_back(a * c - b * b);
  t1.push_back(q.qx * q.qy - q.p * q.p);
  return WedgeStrata{detail::fiber_ideal(fiber, base.ideal.generators(), options),
                     detail::fiber_ideal(fiber, {a, b, c}, options),
                     detail::fiber_ideal(fiber, {q.qx, q.p, q.qy}, options),
                     detail::fiber_ideal(fiber, t1, options)};
}

struct WitnessResult {
  bool witness_rational = false;      // over Q with π free
  bool witness_mod_p = false;         // over GF(p) with π free
  std::vector<bool> principal;        // J̄ + I_i == J̄ + (branch_i)
  bool pass() const {
    bool ok = witness_rational && witness_mod_p;
    for (bool b : principal) ok = ok && b;
    return ok;
  }
};

/// Witness that π is, up to the unit 2, the product of the three branch
/// equations modulo the chart ideal, and that each component is cut out on
/// the special fiber by its single branch equation.
inline WitnessResult semistable_witness_details(int n, ChartId chart, std::uint32_t p, std::uint32_t u,
                                                GroebnerOptions options = {}) {
  detail::require_prime_and_unit(p, u);
  const BlowupChartData d = blowup_chart_data(n, chart);
  WitnessResult r;
  r.witness_rational = MixedIdeal(d.ring, d.generators, options).contains(d.witness);

  const RingPtr mod_p = make_ring_context(d.ring->variables(), d.ring->order(), FieldDescriptor::prime_field(p),
                                          PiMode::variable);
  auto lift = [&](const MixedPoly& f) {
    std::vector<Term<ModP>> terms;
    for (const auto& t : f.terms())
      terms.push_back({t.monomial, ModP::from_rational(t.coefficient.value(), mod_p->field())});
    return Polynomial<ModP>::from_terms(mod_p, std::move(terms));
  };
  std::vector<Polynomial<ModP>> gens_p;
  for (const auto& g : d.generators) gens_p.push_back(lift(g));
  r.witness_mod_p = Ideal<ModP>(mod_p, gens_p, options).contains(lift(d.witness));

  const RingPtr fiber = special_fiber_ring(*d.ring, p);
  const FiberIdeal jbar = detail::fiber_ideal(fiber, d.generators, options);
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const FiberIdeal with_component = ideal_sum(jbar, detail::fiber_ideal(fiber, d.components[i], options));
    const FiberIdeal with_branch = ideal_sum(jbar, detail::fiber_ideal(fiber, {d.branches[i]}, options));
    r.principal.push_back(ideal_equal(with_component, with_branch));
  }
  return r;
}

inline bool semistable_witness_check(int n, ChartId chart, std::uint32_t p, std::uint32_t u,
                                     GroebnerOptions options = {}) {
  return semistable_witness_details(n, chart, p, u, std::move(options)).pass();
}

/// The chart ideal over Q(π), π² = p·u.
inline Ideal<QuadraticNumber> generic_fiber_chart(int n, ChartId chart, std::uint32_t p, std::uint32_t u,
                                                  GroebnerOptions options = {}) {
  const BlowupChartData d = blowup_chart_data(n, chart);
  const RingPtr fiber = generic_fiber_ring(*d.ring, p, u);
  std::vector<Polynomial<QuadraticNumber>> gens;
  for (const auto& g : d.generators) gens.push_back(to_generic_fiber(g, fiber));
  return Ideal<QuadraticNumber>(fiber, std::move(gens), std::move(options));
}

}  // namespace lmv
