#pragma once

// Exact coefficient fields: the rationals, prime fields GF(p) for odd p, and
// the quadratic extension Q(s) with s^2 = p*u.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "lmv/error.hpp"

namespace lmv {

enum class FieldKind { rationals, prime_field, quadratic_extension };

constexpr bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

constexpr bool is_perfect_square(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;
  std::uint32_t u = 0;

  static FieldDescriptor rationals() { return {}; }

  static FieldDescriptor prime_field(std::uint64_t p) {
    if (!is_odd_prime(p)) throw InvalidArgument("p must be an odd prime");
    if (p >= (1ULL << 31)) throw InvalidArgument("p must be below 2^31");
    return {FieldKind::prime_field, static_cast<std::uint32_t>(p), 0};
  }

  static FieldDescriptor quadratic_extension(std::uint64_t p, std::uint64_t u) {
    if (!is_odd_prime(p)) throw InvalidArgument("p must be an odd prime");
    if (u < 1 || u >= p) throw InvalidArgument("u must satisfy 1 <= u < p");
    if (is_perfect_square(p * u)) throw InvalidArgument("p*u must not be a perfect square");
    return {FieldKind::quadratic_extension, static_cast<std::uint32_t>(p),
            static_cast<std::uint32_t>(u)};
  }

  /// s^2 for the quadratic extension.
  std::int64_t square_of_generator() const {
    return static_cast<std::int64_t>(p) * static_cast<std::int64_t>(u);
  }

  std::string to_string() const {
    switch (kind) {
      case FieldKind::rationals:
        return "QQ";
      case FieldKind::prime_field:
        return "GF(" + std::to_string(p) + ")";
      case FieldKind::quadratic_extension:
        return "QQ[pi]/(pi^2-" + std::to_string(square_of_generator()) + ")";
    }
    return "?";
  }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// How a coefficient prints inside a polynomial. `magnitude` is the text of
/// |c| (or the whole value when no sign applies); `unit` marks coefficients
/// that are dropped in front of a non-constant monomial.
struct CoefficientText {
  bool negative = false;
  std::string magnitude;
  bool unit = false;
};

class Rational {
 public:
  static constexpr FieldKind kind = FieldKind::rationals;

  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw DivisionByZero();
    value_.canonicalize();
  }

  static Rational from_rational(const mpq_class& q, const FieldDescriptor& field) {
    if (field.kind != FieldKind::rationals) throw FieldMismatch("expected the rationals");
    return Rational(q);
  }

  const mpq_class& value() const { return value_; }
  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_minus_one() const { return value_ == -1; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

  std::string to_string() const { return value_.get_str(); }

  CoefficientText text() const {
    CoefficientText t;
    t.negative = sgn(value_) < 0;
    t.magnitude = mpq_class(abs(value_)).get_str();
    t.unit = abs(value_) == 1;
    return t;
  }

 private:
  mpq_class value_;
};

/// Residue in [0, p).
class ModP {
 public:
  static constexpr FieldKind kind = FieldKind::prime_field;

  ModP() = default;
  ModP(std::int64_t v, std::uint32_t modulus) : modulus_(modulus) {
    std::int64_t r = v % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    value_ = static_cast<std::uint32_t>(r);
  }

  static ModP from_rational(const mpq_class& q, const FieldDescriptor& field) {
    if (field.kind != FieldKind::prime_field) throw FieldMismatch("expected a prime field");
    const std::uint32_t p = field.p;
    const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0)
      throw NotRepresentable("coefficient " + q.get_str() + " has denominator divisible by " +
                             std::to_string(p));
    const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return ModP(static_cast<std::int64_t>(num), p) * ModP(static_cast<std::int64_t>(den), p).inverse();
  }

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldDescriptor descriptor() const { return {FieldKind::prime_field, modulus_, 0}; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_minus_one() const { return modulus_ != 0 && value_ == modulus_ - 1; }

  ModP inverse() const {
    if (value_ == 0) throw DivisionByZero();
    std::int64_t a = value_, b = modulus_, x0 = 1, x1 = 0;
    while (b != 0) {
      const std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return ModP(x0, modulus_);
  }

  ModP operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  ModP& operator+=(const ModP& o) {
    check(o);
    std::uint64_t s = std::uint64_t{value_} + o.value_;
    if (s >= modulus_) s -= modulus_;
    value_ = static_cast<std::uint32_t>(s);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % modulus_);
    return *this;
  }
  ModP& operator/=(const ModP& o) {
    check(o);
    return *this *= o.inverse();
  }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  std::string to_string() const { return std::to_string(value_); }

  CoefficientText text() const { return {false, std::to_string(value_), value_ == 1}; }

 private:
  static ModP raw(std::uint32_t v, std::uint32_t m) {
    ModP r;
    r.value_ = v;
    r.modulus_ = m;
    return r;
  }
  void check(const ModP& o) const {
    if (modulus_ != o.modulus_)
      throw FieldMismatch("residues modulo " + std::to_string(modulus_) + " and " +
                          std::to_string(o.modulus_));
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// alpha + beta*s with s^2 = d. The generator s plays the role of the
/// uniformizer pi and prints as "pi".
class QuadraticNumber {
 public:
  static constexpr FieldKind kind = FieldKind::quadratic_extension;

  QuadraticNumber() = default;
  QuadraticNumber(mpq_class alpha, mpq_class beta, std::int64_t d)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), d_(d) {
    alpha_.canonicalize();
    beta_.canonicalize();
  }

  static QuadraticNumber from_rational(const mpq_class& q, const FieldDescriptor& field) {
    if (field.kind != FieldKind::quadratic_extension)
      throw FieldMismatch("expected a quadratic extension");
    return QuadraticNumber(q, 0, field.square_of_generator());
  }

  static QuadraticNumber generator(const FieldDescriptor& field) {
    if (field.kind != FieldKind::quadratic_extension)
      throw FieldMismatch("expected a quadratic extension");
    return QuadraticNumber(0, 1, field.square_of_generator());
  }

  const mpq_class& alpha() const { return alpha_; }
  const mpq_class& beta() const { return beta_; }
  std::int64_t square_of_generator() const { return d_; }
  FieldDescriptor descriptor() const {
    // p and u are not recoverable from d alone; only d participates in equality.
    return {FieldKind::quadratic_extension, static_cast<std::uint32_t>(d_), 1};
  }

  bool is_zero() const { return sgn(alpha_) == 0 && sgn(beta_) == 0; }
  bool is_one() const { return alpha_ == 1 && sgn(beta_) == 0; }
  bool is_minus_one() const { return alpha_ == -1 && sgn(beta_) == 0; }

  QuadraticNumber inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class norm = alpha_ * alpha_ - mpq_class(d_) * beta_ * beta_;
    return QuadraticNumber(alpha_ / norm, -beta_ / norm, d_);
  }

  QuadraticNumber operator-() const { return QuadraticNumber(-alpha_, -beta_, d_); }

  QuadraticNumber& operator+=(const QuadraticNumber& o) {
    check(o);
    alpha_ += o.alpha_;
    beta_ += o.beta_;
    return *this;
  }
  QuadraticNumber& operator-=(const QuadraticNumber& o) {
    check(o);
    alpha_ -= o.alpha_;
    beta_ -= o.beta_;
    return *this;
  }
  QuadraticNumber& operator*=(const QuadraticNumber& o) {
    check(o);
    mpq_class a = alpha_ * o.alpha_ + mpq_class(d_) * beta_ * o.beta_;
    mpq_class b = alpha_ * o.beta_ + beta_ * o.alpha_;
    alpha_ = std::move(a);
    beta_ = std::move(b);
    return *this;
  }
  QuadraticNumber& operator/=(const QuadraticNumber& o) {
    check(o);
    return *this *= o.inverse();
  }

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.d_ == b.d_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

  std::string to_string() const {
    const CoefficientText t = text();
    return (t.negative ? "-" : "") + t.magnitude;
  }

  CoefficientText text() const {
    CoefficientText t;
    if (sgn(beta_) == 0) {
      t.negative = sgn(alpha_) < 0;
      t.magnitude = mpq_class(abs(alpha_)).get_str();
      t.unit = abs(alpha_) == 1;
      return t;
    }
    const mpq_class b = abs(beta_);
    const std::string pi_part = b == 1 ? std::string("pi") : b.get_str() + "*pi";
    if (sgn(alpha_) == 0) {
      t.negative = sgn(beta_) < 0;
      t.magnitude = pi_part;
      return t;
    }
    t.magnitude = "(" + alpha_.get_str() + (sgn(beta_) < 0 ? " - " : " + ") + pi_part + ")";
    return t;
  }

 private:
  void check(const QuadraticNumber& o) const {
    if (d_ != o.d_)
      throw FieldMismatch("quadratic extensions with s^2 = " + std::to_string(d_) + " and " +
                          std::to_string(o.d_));
  }

  mpq_class alpha_;
  mpq_class beta_;
  std::int64_t d_ = 0;
};

template <class K>
concept CoefficientField = requires(const K a, const K b, const mpq_class q, const FieldDescriptor f) {
  { K::kind } -> std::convertible_to<FieldKind>;
  { K::from_rational(q, f) } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<K>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::same_as<bool>;
  { a.text() } -> std::same_as<CoefficientText>;
};

/// Runtime-tagged element, for callers that only know the descriptor at run time.
using FieldElement = std::variant<Rational, ModP, QuadraticNumber>;

enum class FieldOp { add, sub, mul, div, neg, inv };

/// Single entry point for scalar arithmetic on runtime-tagged elements. Unary
/// operations ignore `b`.
inline FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement& b = FieldElement{}) {
  const bool unary = op == FieldOp::neg || op == FieldOp::inv;
  if (!unary && a.index() != b.index()) throw FieldMismatch("operands from different field kinds");
  return std::visit(
      [&](const auto& x) -> FieldElement {
        using T = std::decay_t<decltype(x)>;
        if (op == FieldOp::neg) return -x;
        if (op == FieldOp::inv) return x.inverse();
        const T& y = std::get<T>(b);
        switch (op) {
          case FieldOp::add: return x + y;
          case FieldOp::sub: return x - y;
          case FieldOp::mul: return x * y;
          case FieldOp::div: return x / y;
          default: break;
        }
        throw InvalidArgument("unsupported field operation");
      },
      a);
}

}  // namespace lmv
