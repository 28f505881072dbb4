#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lmv/scheme.hpp"
#include "lmv/text.hpp"

namespace {

using namespace lmv;

RingPtr ring_over(std::vector<std::string> vars, FieldDescriptor field = FieldDescriptor::rationals()) {
  return make_ring_context(std::move(vars), MonomialOrder::grevlex(), field, PiMode::absent);
}

template <CoefficientField K>
Ideal<K> ideal(const RingPtr& ring, std::initializer_list<const char*> src) {
  std::vector<Polynomial<K>> gens;
  for (const char* s : src) gens.push_back(parse_polynomial<K>(s, ring));
  return Ideal<K>(ring, std::move(gens));
}

TEST(Jacobian, PartialDerivatives) {
  const auto ring = ring_over({"x", "y", "z"});
  const auto j = jacobian(ideal<Rational>(ring, {"x*y", "x^2*z - y"}), {"x", "y", "z"});
  ASSERT_EQ(j.rows(), 2U);
  ASSERT_EQ(j.cols(), 3U);
  EXPECT_EQ(to_string(j.at(0, 0)), "y");
  EXPECT_EQ(to_string(j.at(0, 1)), "x");
  EXPECT_EQ(to_string(j.at(0, 2)), "0");
  EXPECT_EQ(to_string(j.at(1, 0)), "2*x*z");
  EXPECT_EQ(to_string(j.at(1, 1)), "-1");
  EXPECT_EQ(to_string(j.at(1, 2)), "x^2");
  EXPECT_THROW(jacobian(ideal<Rational>(ring, {"x"}), {"w"}), UnknownVariable);
}

TEST(Minors, TwoByTwoDeterminant) {
  const auto ring = ring_over({"x", "y", "z", "w"});
  auto P = [&](const char* s) { return parse_polynomial<Rational>(s, ring); };
  const PolyMatrix<Rational> m(ring, {{P("x"), P("y")}, {P("z"), P("w")}});
  EXPECT_TRUE(ideal_equal(minors_ideal(m, 2), ideal<Rational>(ring, {"x*w - y*z"})));
  EXPECT_TRUE(ideal_equal(minors_ideal(m, 1), ideal<Rational>(ring, {"x", "y", "z", "w"})));
}

TEST(Minors, ThreeByThreeAgainstLeibniz) {
  const auto ring = ring_over({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
  const auto& v = ring->variables();
  std::vector<std::vector<Polynomial<Rational>>> rows(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) rows[r].push_back(Polynomial<Rational>::variable(ring, v[3 * r + c]));
  const PolyMatrix<Rational> m(ring, rows);
  const auto det = parse_polynomial<Rational>("a*e*i + b*f*g + c*d*h - c*e*g - b*d*i - a*f*h", ring);
  EXPECT_TRUE(ideal_equal(minors_ideal(m, 3), Ideal<Rational>(ring, {det})));
}

TEST(Minors, InvariantUnderRowAndColumnPermutation) {
  const auto ring = ring_over({"x", "y", "z"});
  auto P = [&](const char* s) { return parse_polynomial<Rational>(s, ring); };
  std::vector<std::vector<Polynomial<Rational>>> rows = {
      {P("x"), P("y^2"), P("z")}, {P("x*y"), P("1"), P("z - x")}, {P("y + z"), P("x^2"), P("y")}};
  const auto reference = minors_ideal(PolyMatrix<Rational>(ring, rows), 2);
  std::vector<std::size_t> perm = {0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::vector<Polynomial<Rational>>> permuted;
    for (std::size_t r : perm) {
      std::vector<Polynomial<Rational>> row;
      for (std::size_t c : {2U, 0U, 1U}) row.push_back(rows[r][c]);
      permuted.push_back(row);
    }
    EXPECT_TRUE(ideal_equal(minors_ideal(PolyMatrix<Rational>(ring, permuted), 2), reference));
  }
}

TEST(Smoothness, CrossingLinesSingularAtOrigin) {
  const auto ring = ring_over({"x", "y"});
  const auto v = smoothness_check(ideal<Rational>(ring, {"x*y"}), {"x", "y"}, 1);
  EXPECT_EQ(v.status, SmoothnessStatus::singular);
  EXPECT_EQ(v.dimension, 1);
  ASSERT_TRUE(v.singular_locus.has_value());
  EXPECT_TRUE(ideal_equal(*v.singular_locus, ideal<Rational>(ring, {"x", "y"})));
}

TEST(Smoothness, CuspAndLine) {
  const auto ring = ring_over({"x", "y"});
  EXPECT_EQ(smoothness_check(ideal<Rational>(ring, {"y^2 - x^3"}), {"x", "y"}, 1).status, SmoothnessStatus::singular);
  EXPECT_EQ(smoothness_check(ideal<Rational>(ring, {"y - x^3"}), {"x", "y"}, 1).status, SmoothnessStatus::smooth);
}

TEST(Smoothness, EmptyAndMismatch) {
  const auto ring = ring_over({"x", "y"});
  EXPECT_EQ(smoothness_check(ideal<Rational>(ring, {"x", "x - 1"}), {"x", "y"}, 1).status, SmoothnessStatus::empty);
  const auto v = smoothness_check(ideal<Rational>(ring, {"x"}), {"x", "y"}, 0);
  EXPECT_EQ(v.status, SmoothnessStatus::inconclusive);
  EXPECT_EQ(v.notes, "dimension 1 differs from expected 0");
  EXPECT_THROW(smoothness_check(ideal<Rational>(ring, {"x"}), {"x", "y"}, 3), InvalidArgument);
}

// GF(9) = GF(3)[i], i^2 = -1.
struct F9 {
  int a = 0, b = 0;
  F9 operator+(F9 o) const { return {(a + o.a) % 3, (b + o.b) % 3}; }
  F9 operator*(F9 o) const { return {((a * o.a - b * o.b) % 3 + 3) % 3, (a * o.b + b * o.a) % 3}; }
  bool zero() const { return a == 0 && b == 0; }
};

TEST(Smoothness, CircleOverGF3WithPointOracle) {
  const auto ring = ring_over({"x", "y"}, FieldDescriptor::prime_field(3));
  const auto v = smoothness_check(ideal<ModP>(ring, {"x^2 + y^2 - 1"}), {"x", "y"}, 1);
  EXPECT_EQ(v.status, SmoothnessStatus::smooth);
  // f = x^2 + y^2 - 1, df = (2x, 2y): no common zero over GF(9)
  std::vector<F9> all;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) all.push_back({a, b});
  const F9 minus_one{2, 0}, two{2, 0};
  for (F9 x : all)
    for (F9 y : all) {
      const bool on = (x * x + y * y + minus_one).zero();
      EXPECT_FALSE(on && (two * x).zero() && (two * y).zero());
    }
}

// Plane curves over GF(5): every rational point where f and both partials
// vanish must lie on the reported singular locus.
TEST(Smoothness, RandomPlaneCurvesAgainstRationalPoints) {
  const std::uint32_t p = 5;
  const auto ring = ring_over({"x", "y"}, FieldDescriptor::prime_field(p));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<unsigned> c(0, p - 1);
  const std::vector<std::pair<unsigned, unsigned>> shape = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
                                                            {0, 2}, {3, 0}, {2, 1}, {0, 3}};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Term<ModP>> terms;
    for (auto [i, j] : shape) terms.push_back({Monomial({i, j}), ModP(c(rng) * (c(rng) < 3), p)});
    const auto f = Polynomial<ModP>::from_terms(ring, terms);
    if (f.is_constant() || f.total_degree() < 1) continue;
    const Ideal<ModP> I(ring, {f});
    const auto v = smoothness_check(I, {"x", "y"}, 1);
    if (v.status == SmoothnessStatus::inconclusive || v.status == SmoothnessStatus::empty) continue;
    auto ev = [&](const Polynomial<ModP>& g, unsigned x, unsigned y) {
      return evaluate(g, std::map<std::string, ModP>{{"x", ModP(x, p)}, {"y", ModP(y, p)}}).is_zero();
    };
    const auto fx = differentiate(f, "x"), fy = differentiate(f, "y");
    bool rational_singular = false;
    for (unsigned x = 0; x < p; ++x)
      for (unsigned y = 0; y < p; ++y) {
        if (!(ev(f, x, y) && ev(fx, x, y) && ev(fy, x, y))) continue;
        rational_singular = true;
        for (const auto& g : v.singular_locus->generators()) EXPECT_TRUE(ev(g, x, y));
      }
    if (rational_singular) EXPECT_EQ(v.status, SmoothnessStatus::singular);
  }
}

TEST(Crossings, TwoPlanes) {
  const auto ring = ring_over({"x", "y", "z"});
  const auto report = crossings_check(std::vector{ideal<Rational>(ring, {"x"}), ideal<Rational>(ring, {"y"})}, 2,
                                      {"x", "y", "z"});
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.records.size(), 3U);
  EXPECT_EQ(report.records.back().dimension, 1);
  EXPECT_EQ(report.records.back().status, SmoothnessStatus::smooth);
}

TEST(Crossings, DuplicateComponentsRejected) {
  const auto ring = ring_over({"x", "y"});
  EXPECT_THROW(crossings_check(std::vector{ideal<Rational>(ring, {"x"}), ideal<Rational>(ring, {"2*x"})}, 1,
                               {"x", "y"}),
               InvalidArgument);
}

TEST(Crossings, EmptyIntersectionNeedsPermission) {
  const auto ring = ring_over({"x", "y"});
  const std::vector comps{ideal<Rational>(ring, {"x"}), ideal<Rational>(ring, {"x - 1"})};
  EXPECT_FALSE(crossings_check(comps, 1, {"x", "y"}).pass);
  EXPECT_TRUE(crossings_check(comps, 1, {"x", "y"}, true).pass);
}

TEST(Crossings, TangentComponentsFail) {
  const auto ring = ring_over({"x", "y"});
  const auto report =
      crossings_check(std::vector{ideal<Rational>(ring, {"y"}), ideal<Rational>(ring, {"y - x^2"})}, 1, {"x", "y"});
  EXPECT_FALSE(report.pass);
}

TEST(ReducedUnion, Examples) {
  const auto ring = ring_over({"x", "y"});
  const std::vector comps{ideal<Rational>(ring, {"x"}), ideal<Rational>(ring, {"y"})};
  EXPECT_TRUE(reduced_union_check(ideal<Rational>(ring, {"x*y"}), comps));
  EXPECT_FALSE(reduced_union_check(ideal<Rational>(ring, {"x^2*y"}), comps));
  EXPECT_THROW(reduced_union_check(ideal<Rational>(ring, {"x"}), std::vector<Ideal<Rational>>{}), InvalidArgument);
}

}  // namespace
