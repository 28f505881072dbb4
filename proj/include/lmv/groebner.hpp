#pragma once

// Buchberger's algorithm with the Gebauer-Moeller installation of the
// coprime and chain criteria, normal selection strategy (smallest lcm first)
// and monic normalization of every new basis element.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lmv/error.hpp"
#include "lmv/polynomial.hpp"

namespace lmv {

inline constexpr std::string_view kEngineVersion = "lmv-gb-1";

struct GBTrace {
  std::size_t pairs_processed = 0;
  std::size_t pairs_discarded = 0;
  std::size_t reduction_steps = 0;
};

/// Persistent reduced-basis storage keyed by a canonical text key. Payloads are
/// basis polynomials in canonical text form.
class BasisStore {
 public:
  virtual ~BasisStore() = default;
  virtual std::optional<std::vector<std::string>> load(const std::string& key) = 0;
  virtual void save(const std::string& key, const std::vector<std::string>& basis) = 0;
};

struct GroebnerOptions {
  /// Pair ceiling; exceeding it raises ResourceExhausted.
  std::size_t max_pairs = 1'000'000;
  /// When set, pairs are processed in a pseudo-random order instead of the
  /// normal strategy. The reduced basis is unaffected.
  std::optional<std::uint64_t> shuffle_seed;
  std::shared_ptr<BasisStore> store;
};

namespace detail {

/// Computes work - c*m*g where the leading terms cancel; `work` is consumed
/// from `head`, g from its second term on.
template <CoefficientField K>
void subtract_multiple(std::vector<Term<K>>& work, std::size_t head, const K& c, const Monomial& m,
                       const std::vector<Term<K>>& g, const MonomialOrder& order, std::vector<Term<K>>& out) {
  out.clear();
  out.reserve(work.size() - head + g.size());
  std::size_t i = head + 1, j = 1;
  while (i < work.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(std::move(work[i++]));
      continue;
    }
    Monomial gm = g[j].monomial * m;
    const int cmp = i == work.size() ? -1 : order.compare(work[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(std::move(work[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, -(g[j].coefficient * c)});
      ++j;
    } else {
      K s = work[i].coefficient - g[j].coefficient * c;
      if (!s.is_zero()) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
}

/// Full reduction of `f` by the divisors in list order, leading term first.
template <CoefficientField K>
Polynomial<K> reduce_fully(const Polynomial<K>& f, const std::vector<const Polynomial<K>*>& divisors,
                           GBTrace* trace) {
  const MonomialOrder& order = f.ring()->order();
  std::vector<Term<K>> work = f.terms(), scratch, remainder;
  std::size_t head = 0;
  while (head < work.size()) {
    const Monomial& lm = work[head].monomial;
    const Polynomial<K>* divisor = nullptr;
    for (const Polynomial<K>* g : divisors)
      if (g->leading_monomial().divides(lm)) {
        divisor = g;
        break;
      }
    if (!divisor) {
      remainder.push_back(std::move(work[head++]));
      continue;
    }
    const K c = divisor->leading_coefficient().is_one() ? work[head].coefficient
                                                         : work[head].coefficient / divisor->leading_coefficient();
    const Monomial m = quotient(lm, divisor->leading_monomial());
    subtract_multiple(work, head, c, m, divisor->terms(), order, scratch);
    std::swap(work, scratch);
    head = 0;
    if (trace) ++trace->reduction_steps;
  }
  return Polynomial<K>::from_sorted_terms(f.ring(), std::move(remainder));
}

template <CoefficientField K>
class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& options, GBTrace& trace)
      : ring_(std::move(ring)), order_(ring_->order()), options_(options), trace_(trace) {
    if (options_.shuffle_seed) rng_.seed(*options_.shuffle_seed);
  }

  std::vector<Polynomial<K>> run(const std::vector<Polynomial<K>>& generators) {
    for (const auto& g : generators) {
      require_same_ring(g.ring(), ring_);
      Polynomial<K> h = reduce_fully(g, active_divisors(), &trace_);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic());
    }
    while (!pairs_.empty()) {
      const std::size_t k = select();
      const Pair pair = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();
      if (trace_.pairs_processed >= options_.max_pairs) throw ResourceExhausted(trace_.pairs_processed);
      ++trace_.pairs_processed;
      Polynomial<K> h = reduce_fully(spoly(basis_[pair.i], basis_[pair.j], pair.lcm), active_divisors(), &trace_);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic());
    }
    return finalize();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t serial;
  };

  std::vector<Polynomial<K>> unit() const { return {Polynomial<K>::integer(ring_, 1)}; }

  std::vector<const Polynomial<K>*> active_divisors() const {
    std::vector<const Polynomial<K>*> out;
    out.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back(&basis_[i]);
    return out;
  }

  Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g, const Monomial& l) const {
    // Both operands are monic.
    const K one = scalar<K>(*ring_, 1);
    return f.times_term(quotient(l, f.leading_monomial()), one) - g.times_term(quotient(l, g.leading_monomial()), one);
  }

  std::size_t select() {
    if (options_.shuffle_seed) {
      std::uniform_int_distribution<std::size_t> dist(0, pairs_.size() - 1);
      return dist(rng_);
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && pairs_[k].serial < pairs_[best].serial)) best = k;
    }
    return best;
  }

  void insert(Polynomial<K> h) {
    const std::size_t hi = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < hi; ++i)
      if (active_[i]) candidates.push_back({i, hi, lcm(basis_[i].leading_monomial(), lh), 0});

    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = coprime(basis_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::size_t added = 0;
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!coprime(basis_[p.i].leading_monomial(), lh)) {
        p.serial = next_serial_++;
        fresh.push_back(p);
        ++added;
      }
    trace_.pairs_discarded += candidates.size() - added;

    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (const auto& p : pairs_) {
      const bool redundant = lh.divides(p.lcm) && !(lcm(basis_[p.i].leading_monomial(), lh) == p.lcm) &&
                             !(lcm(basis_[p.j].leading_monomial(), lh) == p.lcm);
      if (redundant)
        ++trace_.pairs_discarded;
      else
        survivors.push_back(p);
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);

    for (std::size_t i = 0; i < hi; ++i)
      if (active_[i] && lh.divides(basis_[i].leading_monomial())) active_[i] = false;
    active_[hi] = true;
  }

  std::vector<Polynomial<K>> finalize() {
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) minimal.push_back(basis_[i]);
    std::vector<Polynomial<K>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      std::vector<Term<K>> tail(minimal[i].terms().begin() + 1, minimal[i].terms().end());
      Polynomial<K> rest = reduce_fully(Polynomial<K>::from_sorted_terms(ring_, std::move(tail)), others, &trace_);
      std::vector<Term<K>> terms{minimal[i].leading_term()};
      for (const auto& t : rest.terms()) terms.push_back(t);
      reduced.push_back(Polynomial<K>::from_sorted_terms(ring_, std::move(terms)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
      return order_.greater(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
  }

  RingPtr ring_;
  MonomialOrder order_;
  const GroebnerOptions& options_;
  GBTrace& trace_;
  std::vector<Polynomial<K>> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::uint64_t next_serial_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Remainder of multivariate division of f by G, divisors tried in list order
/// and the leading term reduced first. No term of the result is divisible by
/// a leading monomial of G.
template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors,
                          GBTrace* trace = nullptr) {
  if (divisors.empty()) throw InvalidArgument("normal form against an empty divisor list");
  std::vector<const Polynomial<K>*> ptrs;
  for (const auto& g : divisors) {
    require_same_ring(f.ring(), g.ring());
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return detail::reduce_fully(f, ptrs, trace);
}

template <CoefficientField K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  require_same_ring(f.ring(), g.ring());
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.monic().times_term(quotient(l, f.leading_monomial()), scalar<K>(*f.ring(), 1)) -
         g.monic().times_term(quotient(l, g.leading_monomial()), scalar<K>(*f.ring(), 1));
}

/// The reduced Groebner basis of the ideal generated by `generators` under
/// the order of `ring`: monic, inter-reduced, sorted descending by leading
/// monomial. Empty for the zero ideal, {1} for the unit ideal.
template <CoefficientField K>
std::vector<Polynomial<K>> reduced_groebner_basis(const std::vector<Polynomial<K>>& generators, const RingPtr& ring,
                                                  const GroebnerOptions& options = {}, GBTrace* trace = nullptr) {
  GBTrace local;
  detail::Buchberger<K> engine(ring, options, trace ? *trace : local);
  return engine.run(generators);
}

/// Buchberger's criterion checked directly: every S-polynomial of G reduces
/// to zero modulo G.
template <CoefficientField K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis) {
  if (basis.empty()) return true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace lmv
