#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lmv/error.hpp"
#include "lmv/field.hpp"
#include "lmv/monomial.hpp"
#include "lmv/ring.hpp"

namespace lmv {

template <CoefficientField K>
struct Term {
  Monomial monomial;
  K coefficient;
};

template <CoefficientField K>
K scalar(const RingContext& ring, const mpq_class& q) {
  return K::from_rational(q, ring.field());
}

/// Sparse polynomial. Terms are kept strictly descending in the ring's order
/// with no zero coefficients, so equal polynomials have identical storage.
template <CoefficientField K>
class Polynomial {
 public:
  using Coefficient = K;
  using TermType = Term<K>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial f(std::move(ring));
    if (!c.is_zero()) f.terms_.push_back({Monomial(f.ring_->size()), c});
    return f;
  }

  static Polynomial integer(RingPtr ring, long v) {
    const K c = scalar<K>(*ring, mpq_class(v));
    return constant(std::move(ring), c);
  }

  static Polynomial variable(RingPtr ring, std::string_view name) {
    const std::size_t i = ring->require_index(name);
    Monomial m(ring->size());
    m.set(i, 1);
    const K one = scalar<K>(*ring, 1);
    Polynomial f(std::move(ring));
    f.terms_.push_back({m, one});
    return f;
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, const K& c) {
    Polynomial f(std::move(ring));
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
  }

  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<TermType> terms) {
    Polynomial f(std::move(ring));
    const MonomialOrder& order = f.ring_->order();
    std::sort(terms.begin(), terms.end(),
              [&](const TermType& a, const TermType& b) { return order.greater(a.monomial, b.monomial); });
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
        f.terms_.back().coefficient += t.coefficient;
        if (f.terms_.back().coefficient.is_zero()) f.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        f.terms_.push_back(std::move(t));
      }
    }
    return f;
  }

  /// Adopts terms already in canonical descending order.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<TermType> terms) {
    Polynomial f(std::move(ring));
    f.terms_ = std::move(terms);
    return f;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coefficient.is_one(); }

  const TermType& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const K& leading_coefficient() const { return terms_.front().coefficient; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// Bitmask of variables occurring in some term.
  std::uint64_t support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, -t.coefficient});
    return r;
  }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coefficient * c});
    return r;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  /// c * m * this. Order is multiplicative, so sortedness is preserved.
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    if (f.size() == 1) return g.times_term(f.terms_[0].monomial, f.terms_[0].coefficient);
    if (g.size() == 1) return f.times_term(g.terms_[0].monomial, g.terms_[0].coefficient);
    std::vector<TermType> products;
    products.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    return from_terms(f.ring_, std::move(products));
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(unsigned e) const {
    Polynomial result = integer(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!f.ring_ || !g.ring_ || !f.ring_->same_ring(*g.ring_)) return false;
    if (f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].monomial == g.terms_[i].monomial) || !(f.terms_[i].coefficient == g.terms_[i].coefficient))
        return false;
    return true;
  }

 private:
  static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
    require_same_ring(f.ring_, g.ring_);
    const MonomialOrder& order = f.ring_->order();
    Polynomial r(f.ring_);
    r.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      int c;
      if (i == f.size())
        c = -1;
      else if (j == g.size())
        c = 1;
      else
        c = order.compare(f.terms_[i].monomial, g.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        const auto& t = g.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
      } else {
        K s = subtract ? f.terms_[i].coefficient - g.terms_[j].coefficient
                       : f.terms_[i].coefficient + g.terms_[j].coefficient;
        if (!s.is_zero()) r.terms_.push_back({f.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<TermType> terms_;
};

/// Maps f into `target` by variable name. Every variable occurring in f must
/// exist in `target`; fields must agree.
template <CoefficientField K>
Polynomial<K> rehome(const Polynomial<K>& f, const RingPtr& target) {
  if (f.ring()->same_ring(*target)) return f.ring() == target ? f : Polynomial<K>::from_sorted_terms(target, f.terms());
  if (!(f.ring()->field() == target->field())) throw ContextMismatch("rehome across different fields");
  const RingContext& src = *f.ring();
  std::vector<int> map(src.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (auto j = target->index_of(src.variables()[i])) map[i] = static_cast<int>(*j);
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] < 0) throw ContextMismatch("variable '" + src.variables()[i] + "' missing in target ring");
      m.set(static_cast<std::size_t>(map[i]), t.monomial[i]);
    }
    terms.push_back({m, t.coefficient});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

/// Ring homomorphism defined by `bindings`; unbound variables map to the
/// variable of the same name in `target`.
template <CoefficientField K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::map<std::string, Polynomial<K>>& bindings,
                         const RingPtr& target) {
  const RingContext& src = *f.ring();
  if (!(src.field() == target->field())) throw ContextMismatch("substitution across different fields");
  std::vector<Polynomial<K>> images;
  images.reserve(src.size());
  for (const auto& name : src.variables()) {
    if (auto it = bindings.find(name); it != bindings.end()) {
      require_same_ring(it->second.ring(), target);
      images.push_back(it->second);
    } else if (target->index_of(name)) {
      images.push_back(Polynomial<K>::variable(target, name));
    } else {
      images.emplace_back(RingPtr{});  // no image; rejected if the variable occurs
    }
  }
  for (const auto& [name, _] : bindings)
    if (!src.index_of(name)) throw UnknownVariable(name);

  std::vector<std::vector<Polynomial<K>>> powers(src.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial<K>& {
    if (!images[var].ring()) throw ContextMismatch("variable '" + src.variables()[var] + "' has no image");
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial<K>::integer(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial<K> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<K> product = Polynomial<K>::constant(target, t.coefficient);
    for (std::size_t i = 0; i < src.size() && !product.is_zero(); ++i)
      if (t.monomial[i] > 0) product *= power(i, t.monomial[i]);
    result += product;
  }
  return result;
}

template <CoefficientField K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::map<std::string, Polynomial<K>>& bindings) {
  return substitute(f, bindings, f.ring());
}

template <CoefficientField K>
Polynomial<K> differentiate(const Polynomial<K>& f, std::string_view var) {
  const std::size_t v = f.ring()->require_index(var);
  std::vector<Term<K>> terms;
  for (const auto& t : f.terms()) {
    const unsigned e = t.monomial[v];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(v, e - 1);
    K c = t.coefficient * scalar<K>(*f.ring(), mpq_class(e));
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  // Lowering one exponent can reorder terms under grevlex; re-canonicalize.
  return Polynomial<K>::from_terms(f.ring(), std::move(terms));
}

/// Value at a point assigning every ring variable.
template <CoefficientField K>
K evaluate(const Polynomial<K>& f, const std::map<std::string, K>& point) {
  const RingContext& ring = *f.ring();
  std::vector<K> values;
  values.reserve(ring.size());
  for (const auto& name : ring.variables()) {
    auto it = point.find(name);
    if (it == point.end()) throw InvalidArgument("missing assignment for '" + name + "'");
    values.push_back(it->second);
  }
  K total = scalar<K>(ring, 0);
  for (const auto& t : f.terms()) {
    K v = t.coefficient;
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= values[i];
    total += v;
  }
  return total;
}

}  // namespace lmv
