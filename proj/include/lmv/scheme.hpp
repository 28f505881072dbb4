#pragma once

// Geometric certificates on top of the Groebner engine: Jacobian matrices,
// ideals of minors, the Jacobian smoothness criterion, normal-crossings
// stratification and reduced-union checks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmv/error.hpp"
#include "lmv/ideal.hpp"

namespace lmv {

template <CoefficientField K>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<K>(ring_)) {}

  PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial<K>>> rows) : ring_(std::move(ring)) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows[0].size();
    for (auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("matrix rows of unequal length");
      for (auto& e : r) {
        require_same_ring(e.ring(), ring_);
        entries_.push_back(std::move(e));
      }
    }
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial<K>& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial<K>& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial<K>> entries_;
};

/// (∂g_i/∂v_j) over the listed generators of the ideal, rows in generator order.
template <CoefficientField K>
PolyMatrix<K> jacobian(const Ideal<K>& ideal, const std::vector<std::string>& vars) {
  for (const auto& v : vars) ideal.ring()->require_index(v);
  PolyMatrix<K> m(ideal.ring(), ideal.generators().size(), vars.size());
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) m.at(i, j) = differentiate(ideal.generators()[i], vars[j]);
  return m;
}

namespace detail {

/// Determinants of square submatrices by cofactor expansion along the first
/// chosen row, memoized on (row set, column set).
template <CoefficientField K>
class MinorExpander {
 public:
  explicit MinorExpander(const PolyMatrix<K>& m) : m_(m) {}

  const Polynomial<K>& det(std::uint64_t rows, std::uint64_t cols) {
    const auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial<K> result(m_.ring());
    if (rows == 0) {
      result = Polynomial<K>::integer(m_.ring(), 1);
    } else {
      const std::size_t r = static_cast<std::size_t>(__builtin_ctzll(rows));
      const std::uint64_t rest = rows & (rows - 1);
      bool negate = false;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(cols >> c & 1U)) continue;
        const Polynomial<K>& entry = m_.at(r, c);
        if (!entry.is_zero()) {
          const Polynomial<K>& sub = det(rest, cols & ~(std::uint64_t{1} << c));
          if (!sub.is_zero()) {
            Polynomial<K> t = entry * sub;
            result = negate ? result - t : result + t;
          }
        }
        negate = !negate;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMatrix<K>& m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial<K>> memo_;
};

inline void next_subsets(std::size_t n, std::size_t k, std::vector<std::uint64_t>& out, std::size_t start = 0,
                         std::uint64_t acc = 0) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) next_subsets(n, k - 1, out, i + 1, acc | (std::uint64_t{1} << i));
}

}  // namespace detail

/// All size-c minors, row subsets outer and column subsets inner, both in
/// lexicographic order. Zero minors are omitted; the zero ideal results when
/// all vanish.
template <CoefficientField K>
Ideal<K> minors_ideal(const PolyMatrix<K>& m, std::size_t c, GroebnerOptions options = {}) {
  if (c > m.rows() || c > m.cols()) throw InvalidArgument("minor size exceeds matrix dimensions");
  if (m.rows() > 64) throw InvalidArgument("at most 64 rows supported");
  std::vector<std::uint64_t> row_sets, col_sets;
  detail::next_subsets(m.rows(), c, row_sets);
  detail::next_subsets(m.cols(), c, col_sets);
  detail::MinorExpander<K> expander(m);
  std::vector<Polynomial<K>> gens;
  for (std::uint64_t rs : row_sets)
    for (std::uint64_t cs : col_sets) {
      const Polynomial<K>& d = expander.det(rs, cs);
      if (d.is_zero()) continue;
      const Polynomial<K> monic = d.monic();
      bool seen = false;
      for (const auto& g : gens)
        if (g.monic() == monic) {
          seen = true;
          break;
        }
      if (!seen) gens.push_back(d);
    }
  return Ideal<K>(m.ring(), std::move(gens), std::move(options));
}

enum class SmoothnessStatus { smooth, singular, empty, inconclusive };

inline std::string to_string(SmoothnessStatus s) {
  switch (s) {
    case SmoothnessStatus::smooth: return "smooth";
    case SmoothnessStatus::singular: return "singular";
    case SmoothnessStatus::empty: return "empty";
    case SmoothnessStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

template <CoefficientField K>
struct SmoothnessVerdict {
  SmoothnessStatus status = SmoothnessStatus::inconclusive;
  int dimension = -1;
  /// I + (c x c minors of the Jacobian); absent when not computed.
  std::optional<Ideal<K>> singular_locus;
  std::string notes;
};

/// Jacobian criterion over the algebraic closure of the coefficient field.
/// A singular verdict on a possibly non-radical presentation is evidence
/// about that presentation only.
template <CoefficientField K>
SmoothnessVerdict<K> smoothness_check(const Ideal<K>& ideal, const std::vector<std::string>& vars, int expected_dim) {
  const int ambient = static_cast<int>(ideal.ring()->size());
  if (expected_dim < 0 || expected_dim > ambient) throw InvalidArgument("expected dimension out of range");
  SmoothnessVerdict<K> v;
  if (ideal.is_unit()) {
    v.status = SmoothnessStatus::empty;
    v.singular_locus = ideal;
    v.notes = "unit ideal";
    return v;
  }
  v.dimension = krull_dimension(ideal);
  if (v.dimension != expected_dim) {
    v.notes = "dimension " + std::to_string(v.dimension) + " differs from expected " + std::to_string(expected_dim);
    return v;
  }
  const std::size_t codim = static_cast<std::size_t>(ambient - expected_dim);
  const PolyMatrix<K> jac = jacobian(ideal, vars);
  std::vector<Polynomial<K>> gens = ideal.groebner_basis();
  if (codim <= jac.rows() && codim <= jac.cols()) {
    const Ideal<K> minors = minors_ideal(jac, codim, ideal.options());
    for (const auto& g : minors.generators())
      if (!g.is_zero()) gens.push_back(g);
  } else {
    v.notes = "fewer generators or variables than the codimension";
  }
  Ideal<K> locus(ideal.ring(), std::move(gens), ideal.options());
  v.status = locus.is_unit() ? SmoothnessStatus::smooth : SmoothnessStatus::singular;
  if (v.status == SmoothnessStatus::singular && v.notes.empty()) v.notes = "Jacobian-singular evidence";
  v.singular_locus = std::move(locus);
  return v;
}

template <CoefficientField K>
struct CrossingRecord {
  std::vector<std::size_t> subset;
  int dimension = -1;
  SmoothnessStatus status = SmoothnessStatus::inconclusive;
  int expected_dimension = 0;
  bool pass = false;
  std::string notes;
};

template <CoefficientField K>
struct CrossingsReport {
  std::vector<CrossingRecord<K>> records;
  bool pass = true;
};

/// Every nonempty subset of k components must sum to a smooth ideal of
/// dimension expected_top_dim - (k - 1). Empty intersections fail unless
/// `allow_empty`. Sum ideals drop generators implied by earlier ones before
/// the Jacobian is formed.
template <CoefficientField K>
CrossingsReport<K> crossings_check(const std::vector<Ideal<K>>& components, int expected_top_dim,
                                   const std::vector<std::string>& vars, bool allow_empty = false) {
  if (components.empty()) throw InvalidArgument("no components");
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (ideal_equal(components[i], components[j]))
        throw InvalidArgument("duplicate components " + std::to_string(i + 1) + " and " + std::to_string(j + 1));

  CrossingsReport<K> report;
  const std::size_t n = components.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> subsets;
    detail::next_subsets(n, k, subsets);
    for (std::uint64_t s : subsets) {
      CrossingRecord<K> rec;
      std::vector<Polynomial<K>> gens;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1U) {
          rec.subset.push_back(i);
          for (const auto& g : components[i].generators()) gens.push_back(g);
        }
      rec.expected_dimension = expected_top_dim - static_cast<int>(k - 1);
      const Ideal<K> sum = prune_generators(Ideal<K>(components[0].ring(), std::move(gens), components[0].options()));
      if (rec.expected_dimension < 0) {
        rec.status = sum.is_unit() ? SmoothnessStatus::empty : SmoothnessStatus::inconclusive;
        rec.dimension = krull_dimension(sum);
      } else {
        const auto verdict = smoothness_check(sum, vars, rec.expected_dimension);
        rec.status = verdict.status;
        rec.dimension = verdict.dimension;
        rec.notes = verdict.notes;
      }
      rec.pass = (rec.status == SmoothnessStatus::smooth && rec.dimension == rec.expected_dimension) ||
                 (rec.status == SmoothnessStatus::empty && allow_empty);
      report.pass = report.pass && rec.pass;
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

/// J equals the intersection of the components.
template <CoefficientField K>
bool reduced_union_check(const Ideal<K>& j, const std::vector<Ideal<K>>& components) {
  if (components.empty()) throw InvalidArgument("empty component list");
  return ideal_equal(j, intersect(components));
}

}  // namespace lmv
