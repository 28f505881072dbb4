#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmv/error.hpp"
#include "lmv/groebner.hpp"
#include "lmv/polynomial.hpp"
#include "lmv/text.hpp"

namespace lmv {

/// Generator list plus a lazily computed reduced Groebner basis under the
/// ring's order. Copies share the cache; the cache is assigned at most once
/// with a canonical value, so racing writers agree.
template <CoefficientField K>
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial<K>> generators, GroebnerOptions options = {})
      : ring_(std::move(ring)), generators_(std::move(generators)), options_(std::move(options)),
        cache_(std::make_shared<Cache>()) {
    if (!ring_) throw InvalidArgument("ideal without a ring");
    if (ring_->field().kind != K::kind) throw FieldMismatch("ring field does not match coefficient type");
    if (generators_.empty()) generators_.emplace_back(ring_);
    for (const auto& g : generators_) require_same_ring(g.ring(), ring_);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  const GroebnerOptions& options() const { return options_; }

  const std::vector<Polynomial<K>>& groebner_basis() const& {
    {
      std::lock_guard lock(cache_->mutex);
      if (cache_->basis) return *cache_->basis;
    }
    GBTrace trace;
    std::vector<Polynomial<K>> basis = compute(trace);
    std::lock_guard lock(cache_->mutex);
    if (!cache_->basis) {
      cache_->basis = std::move(basis);
      cache_->trace = trace;
    }
    return *cache_->basis;
  }

  std::vector<Polynomial<K>> groebner_basis() const&& { return groebner_basis(); }

  GBTrace trace() const {
    groebner_basis();
    std::lock_guard lock(cache_->mutex);
    return cache_->trace;
  }

  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].is_constant();
  }

  bool is_zero() const { return groebner_basis().empty(); }

  bool contains(const Polynomial<K>& f) const {
    require_same_ring(f.ring(), ring_);
    const auto& gb = groebner_basis();
    if (gb.empty()) return f.is_zero();
    return normal_form(f, gb).is_zero();
  }

  /// Canonical text naming this ideal's presentation; the key of persistent
  /// basis caches.
  std::string cache_key() const {
    std::string key = std::string(kEngineVersion) + "\n" + ring_->field().to_string() + "\n" +
                      ring_->order().name() + "\n";
    for (const auto& v : ring_->variables()) key += v + ",";
    key += "\n";
    for (const auto& g : generators_) key += to_string(g) + "\n";
    return key;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial<K>>> basis;
    GBTrace trace;
  };

  std::vector<Polynomial<K>> compute(GBTrace& trace) const {
    if (options_.store) {
      const std::string key = cache_key();
      if (auto stored = options_.store->load(key)) {
        try {
          std::vector<Polynomial<K>> basis;
          for (const auto& s : *stored) basis.push_back(parse_polynomial<K>(s, ring_));
          return basis;
        } catch (const Error&) {
          // Unparseable payload: fall through and overwrite it.
        }
      }
      auto basis = reduced_groebner_basis(generators_, ring_, options_, &trace);
      std::vector<std::string> text;
      for (const auto& g : basis) text.push_back(to_string(g));
      options_.store->save(key, text);
      return basis;
    }
    return reduced_groebner_basis(generators_, ring_, options_, &trace);
  }

  RingPtr ring_;
  std::vector<Polynomial<K>> generators_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

template <CoefficientField K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& ideal) {
  return ideal.contains(f);
}

/// Equal reduced bases under the shared ring and order.
template <CoefficientField K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

/// True when every generator of `a` lies in `b`.
template <CoefficientField K>
bool ideal_contained(const Ideal<K>& a, const Ideal<K>& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

template <CoefficientField K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial<K>> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Ideal<K>(a.ring(), std::move(gens), a.options());
}

namespace detail {

/// Elements of `basis` free of the first `k` variables, mapped into `target`.
template <CoefficientField K>
std::vector<Polynomial<K>> free_of_leading(const std::vector<Polynomial<K>>& basis, std::size_t k,
                                           const RingPtr& target) {
  const std::uint64_t block = k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  std::vector<Polynomial<K>> out;
  for (const auto& g : basis)
    if ((g.support() & block) == 0) out.push_back(rehome(g, target));
  if (out.empty()) out.emplace_back(target);
  return out;
}

}  // namespace detail

/// I intersected with the subring of the trailing variables, computed under
/// block(k). The result lives in I's ring.
template <CoefficientField K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::size_t k) {
  const RingPtr& ring = ideal.ring();
  if (k >= ring->size()) throw InvalidArgument("cannot eliminate all variables");
  if (k == 0) return ideal;
  const RingPtr block = with_order(ring, MonomialOrder::block(k));
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rehome(g, block));
  Ideal<K> lifted(block, std::move(gens), ideal.options());
  return Ideal<K>(ring, detail::free_of_leading(lifted.groebner_basis(), k, ring), ideal.options());
}

/// I ∩ J = (w*I + (1-w)*J) ∩ k[x] for a fresh w eliminated as the leading block.
template <CoefficientField K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr ring = a.ring();
  const RingPtr ext = extend_front(ring, 1, MonomialOrder::block(1));
  const auto w = Polynomial<K>::variable(ext, ext->variables()[0]);
  const auto one_minus_w = Polynomial<K>::integer(ext, 1) - w;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : a.generators()) gens.push_back(w * rehome(g, ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * rehome(g, ext));
  Ideal<K> lifted(ext, std::move(gens), a.options());
  return Ideal<K>(ring, detail::free_of_leading(lifted.groebner_basis(), 1, ring), a.options());
}

template <CoefficientField K>
Ideal<K> intersect(const std::vector<Ideal<K>>& ideals) {
  if (ideals.empty()) throw InvalidArgument("intersection of no ideals");
  Ideal<K> acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

/// I : f^∞ = (I + (1 - w*f)) ∩ k[x].
template <CoefficientField K>
Ideal<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  const RingPtr ring = ideal.ring();
  const RingPtr ext = extend_front(ring, 1, MonomialOrder::block(1));
  const auto w = Polynomial<K>::variable(ext, ext->variables()[0]);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rehome(g, ext));
  gens.push_back(Polynomial<K>::integer(ext, 1) - w * rehome(f, ext));
  Ideal<K> lifted(ext, std::move(gens), ideal.options());
  return Ideal<K>(ring, detail::free_of_leading(lifted.groebner_basis(), 1, ring), ideal.options());
}

/// Rabinowitsch: f ∈ √I iff 1 ∈ I + (1 - w*f).
template <CoefficientField K>
bool radical_membership(const Polynomial<K>& f, const Ideal<K>& ideal) {
  require_same_ring(ideal.ring(), f.ring());
  const RingPtr ext = extend_front(ideal.ring(), 1, MonomialOrder::grevlex());
  const auto w = Polynomial<K>::variable(ext, ext->variables()[0]);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rehome(g, ext));
  gens.push_back(Polynomial<K>::integer(ext, 1) - w * rehome(f, ext));
  return Ideal<K>(ext, std::move(gens), ideal.options()).is_unit();
}

/// Largest size of a variable subset containing the support of no leading
/// monomial of the reduced basis; -1 for the unit ideal.
template <CoefficientField K>
int krull_dimension(const Ideal<K>& ideal) {
  const auto& gb = ideal.groebner_basis();
  const std::size_t n = ideal.ring()->size();
  if (gb.size() == 1 && gb[0].is_constant()) return -1;
  std::vector<std::uint64_t> supports;
  for (const auto& g : gb) supports.push_back(g.leading_monomial().support());
  int best = -1;
  std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t i, std::uint64_t chosen, int size) {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint64_t with = chosen | (std::uint64_t{1} << i);
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint64_t s) { return (s & ~with) == 0; });
    if (independent) search(i + 1, with, size + 1);
    search(i + 1, chosen, size);
  };
  search(0, 0, 0);
  return best;
}

/// Drops generators already in the ideal of those kept before them.
template <CoefficientField K>
Ideal<K> prune_generators(const Ideal<K>& ideal) {
  std::vector<Polynomial<K>> kept;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    if (!kept.empty() && Ideal<K>(ideal.ring(), kept, ideal.options()).contains(g)) continue;
    kept.push_back(g);
  }
  return Ideal<K>(ideal.ring(), std::move(kept), ideal.options());
}

}  // namespace lmv
