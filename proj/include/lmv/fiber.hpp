#pragma once

// Passing from the mixed-characteristic ring (pi a free variable, rational
// coefficients) to its special fiber (pi = 0, coefficients mod p) and to its
// generic fiber (pi the generator of Q(s), s^2 = p*u).

#include <vector>

#include "lmv/polynomial.hpp"

namespace lmv {

namespace detail {

inline std::vector<std::string> without_pi(const RingContext& ring) {
  std::vector<std::string> vars;
  for (const auto& v : ring.variables())
    if (v != kPiName) vars.push_back(v);
  return vars;
}

inline MonomialOrder order_without_pi(const RingContext& ring) {
  MonomialOrder order = ring.order();
  if (order.kind() == MonomialOrder::Kind::block) {
    const std::size_t pi = ring.require_index(kPiName);
    if (pi < order.block_size()) order = MonomialOrder::block(order.block_size() - 1);
  }
  return order;
}

inline void require_mixed(const RingContext& ring) {
  if (ring.field().kind != FieldKind::rationals || ring.pi_mode() != PiMode::variable)
    throw InvalidArgument("expected a rational ring with pi as a variable");
}

}  // namespace detail

inline RingPtr special_fiber_ring(const RingContext& mixed, std::uint32_t p) {
  detail::require_mixed(mixed);
  return make_ring_context(detail::without_pi(mixed), detail::order_without_pi(mixed),
                           FieldDescriptor::prime_field(p), PiMode::absent);
}

inline RingPtr generic_fiber_ring(const RingContext& mixed, std::uint32_t p, std::uint32_t u) {
  detail::require_mixed(mixed);
  return make_ring_context(detail::without_pi(mixed), detail::order_without_pi(mixed),
                           FieldDescriptor::quadratic_extension(p, u), PiMode::field_element);
}

/// Sets pi to 0 and reduces coefficients mod p. Throws NotRepresentable when a
/// denominator is divisible by p.
inline Polynomial<ModP> to_special_fiber(const Polynomial<Rational>& f, const RingPtr& fiber) {
  const RingContext& src = *f.ring();
  detail::require_mixed(src);
  const std::size_t pi = src.require_index(kPiName);
  std::vector<Term<ModP>> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial[pi] > 0) continue;
    ModP c = ModP::from_rational(t.coefficient.value(), fiber->field());
    if (c.is_zero()) continue;
    Monomial m(fiber->size());
    for (std::size_t i = 0, j = 0; i < src.size(); ++i) {
      if (i == pi) continue;
      m.set(j++, t.monomial[i]);
    }
    terms.push_back({m, c});
  }
  return Polynomial<ModP>::from_terms(fiber, std::move(terms));
}

inline Polynomial<ModP> to_special_fiber(const Polynomial<Rational>& f, std::uint32_t p) {
  return to_special_fiber(f, special_fiber_ring(*f.ring(), p));
}

/// Replaces the variable pi by the field generator.
inline Polynomial<QuadraticNumber> to_generic_fiber(const Polynomial<Rational>& f, const RingPtr& fiber) {
  const RingContext& src = *f.ring();
  detail::require_mixed(src);
  const std::size_t pi = src.require_index(kPiName);
  const QuadraticNumber s = QuadraticNumber::generator(fiber->field());
  std::vector<Term<QuadraticNumber>> terms;
  for (const auto& t : f.terms()) {
    QuadraticNumber c = QuadraticNumber::from_rational(t.coefficient.value(), fiber->field());
    for (unsigned e = 0; e < t.monomial[pi]; ++e) c *= s;
    Monomial m(fiber->size());
    for (std::size_t i = 0, j = 0; i < src.size(); ++i) {
      if (i == pi) continue;
      m.set(j++, t.monomial[i]);
    }
    terms.push_back({m, std::move(c)});
  }
  return Polynomial<QuadraticNumber>::from_terms(fiber, std::move(terms));
}

}  // namespace lmv
