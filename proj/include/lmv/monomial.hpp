#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lmv/error.hpp"

namespace lmv {

inline constexpr std::size_t kMaxVariables = 48;

/// Exponent vector over a fixed ambient variable count. Stored inline so that
/// monomial arithmetic never allocates; `support_` keeps one bit per variable
/// with a positive exponent for fast divisibility rejection.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::size_t nvars) : size_(static_cast<std::uint16_t>(nvars)) {
    if (nvars > kMaxVariables)
      throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }

  Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
    std::size_t i = 0;
    for (unsigned e : exponents) set(i++, e);
  }

  explicit Monomial(const std::vector<unsigned>& exponents) : Monomial(exponents.size()) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFF) throw InvalidArgument("exponent exceeds 65535");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<std::uint16_t>(e);
    if (e > 0)
      support_ |= (std::uint64_t{1} << i);
    else
      support_ &= ~(std::uint64_t{1} << i);
  }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
      if (e > 0xFFFF) throw InvalidArgument("exponent exceeds 65535");
      r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, a.exps_[i] - b.exps_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.support_ & b.support_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.degree_ == b.degree_ && a.support_ == b.support_ &&
           std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint16_t size_ = 0;
  std::uint32_t degree_ = 0;
  std::uint64_t support_ = 0;
};

/// Total monomial orders. Variable 0 is the most significant.
/// `block(k)` compares the first k variables by grevlex, breaking ties by
/// grevlex on the remaining ones; it is an elimination order for the block.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder block(std::size_t leading) { return MonomialOrder(Kind::block, leading); }

  /// Accepts "lex", "grevlex" and "block:K".
  static MonomialOrder parse(std::string_view name) {
    if (name == "lex") return lex();
    if (name == "grevlex") return grevlex();
    if (name.starts_with("block:")) {
      const std::string_view digits = name.substr(6);
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return block(std::stoul(std::string(digits)));
    }
    throw InvalidArgument("unknown monomial order '" + std::string(name) + "'");
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::block: return "block:" + std::to_string(block_);
    }
    return "?";
  }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::grevlex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return reverse_scan(a, b, 0, n);
      case Kind::block: {
        const std::size_t k = std::min(block_, n);
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < k; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        if (int c = reverse_scan(a, b, 0, k); c != 0) return c;
        const unsigned ta = a.degree() - da, tb = b.degree() - db;
        if (ta != tb) return ta > tb ? 1 : -1;
        return reverse_scan(a, b, k, n);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  // Grevlex tie-break on [begin, end): the monomial with the smaller exponent
  // in the last differing variable is larger.
  static int reverse_scan(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
    for (std::size_t i = end; i > begin; --i)
      if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
    return 0;
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
};

}  // namespace lmv
