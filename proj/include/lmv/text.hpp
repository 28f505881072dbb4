#pragma once

// Polynomial text grammar:
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' nonneg-integer)?
//   base       := identifier | rational | '(' expression ')'
//   rational   := integer ('/' positive-integer)?
// Whitespace is insignificant. In rings whose pi-mode is field-element the
// identifier "pi" denotes the generator of the coefficient field.

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "lmv/error.hpp"
#include "lmv/polynomial.hpp"

namespace lmv {

namespace detail {

template <CoefficientField K>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

  Polynomial<K> parse() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError("empty input", pos_);
    Polynomial<K> f = expression();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return f;
  }

 private:
  Polynomial<K> expression() {
    bool negate = false;
    skip_space();
    if (peek() == '+' || peek() == '-') {
      negate = src_[pos_] == '-';
      ++pos_;
    }
    Polynomial<K> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial<K> t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial<K> factor() {
    Polynomial<K> b = base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      const mpz_class e = digits("exponent");
      if (e > 0xFFFF) throw ParseError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Polynomial<K> base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expression();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      mpq_class q(digits("integer"));
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t den_at = pos_;
        const mpz_class den = digits("denominator");
        if (den == 0) throw ParseError("zero denominator", den_at);
        q /= mpq_class(den);
      }
      try {
        return Polynomial<K>::constant(ring_, scalar<K>(*ring_, q));
      } catch (const NotRepresentable& e) {
        throw NotRepresentable(std::string(e.what()) + " (offset " + std::to_string(at) + ")");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == kPiName && ring_->pi_mode() == PiMode::field_element) {
        if constexpr (K::kind == FieldKind::quadratic_extension)
          return Polynomial<K>::constant(ring_, K::generator(ring_->field()));
      }
      if (!ring_->index_of(name)) throw UnknownVariable(std::string(name));
      return Polynomial<K>::variable(ring_, name);
    }
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  mpz_class digits(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField K>
Polynomial<K> parse_polynomial(std::string_view src, const RingPtr& ring) {
  if (ring->field().kind != K::kind) throw FieldMismatch("ring field does not match coefficient type");
  return detail::PolynomialParser<K>(src, ring).parse();
}

inline std::string format_monomial(const Monomial& m, const RingContext& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Canonical text: terms descending in the ring's order.
template <CoefficientField K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const CoefficientText c = t.coefficient.text();
    if (first)
      out += c.negative ? "-" : "";
    else
      out += c.negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += c.magnitude;
    } else {
      if (!c.unit) out += c.magnitude + "*";
      out += format_monomial(t.monomial, *f.ring());
    }
  }
  return out;
}

template <CoefficientField K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& f) {
  return os << to_string(f);
}

}  // namespace lmv
