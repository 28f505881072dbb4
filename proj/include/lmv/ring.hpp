#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lmv/error.hpp"
#include "lmv/field.hpp"
#include "lmv/monomial.hpp"

namespace lmv {

/// How the uniformizer enters a ring: as an ordinary variable named "pi"
/// (mixed characteristic, no relation imposed), as the generator of the
/// quadratic coefficient field (generic fiber), or not at all (special fiber).
enum class PiMode { variable, field_element, absent };

inline constexpr std::string_view kPiName = "pi";

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

class RingContext {
 public:
  RingContext(std::vector<std::string> variables, MonomialOrder order, FieldDescriptor field, PiMode pi_mode)
      : variables_(std::move(variables)), order_(order), field_(field), pi_mode_(pi_mode) {
    if (variables_.size() > kMaxVariables)
      throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
    std::unordered_set<std::string_view> seen;
    for (const auto& v : variables_) {
      if (!is_identifier(v)) throw InvalidArgument("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
    }
    const bool has_pi = seen.contains(kPiName);
    if (has_pi && pi_mode_ != PiMode::variable)
      throw InvalidArgument("variable 'pi' is reserved unless pi-mode is variable");
    if (!has_pi && pi_mode_ == PiMode::variable)
      throw InvalidArgument("pi-mode variable requires a variable named 'pi'");
    if ((pi_mode_ == PiMode::field_element) != (field_.kind == FieldKind::quadratic_extension))
      throw InvalidArgument("pi-mode field-element is used exactly with the quadratic extension");
    if (order_.kind() == MonomialOrder::Kind::block && order_.block_size() > variables_.size())
      throw InvalidArgument("block size exceeds variable count");
  }

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t size() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  const FieldDescriptor& field() const { return field_; }
  PiMode pi_mode() const { return pi_mode_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownVariable(std::string(name));
  }

  bool same_ring(const RingContext& other) const {
    return this == &other || (variables_ == other.variables_ && order_ == other.order_ &&
                              field_ == other.field_ && pi_mode_ == other.pi_mode_);
  }

 private:
  std::vector<std::string> variables_;
  MonomialOrder order_;
  FieldDescriptor field_;
  PiMode pi_mode_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring_context(std::vector<std::string> variables, MonomialOrder order, FieldDescriptor field,
                                 PiMode pi_mode) {
  return std::make_shared<const RingContext>(std::move(variables), order, field, pi_mode);
}

inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring_context(ring->variables(), order, ring->field(), ring->pi_mode());
}

/// A name starting with `stem` that is not a variable of `ring`.
inline std::string fresh_variable_name(const RingContext& ring, std::string_view stem = "_w") {
  for (std::size_t k = 0;; ++k) {
    std::string name = std::string(stem) + std::to_string(k);
    if (!ring.index_of(name)) return name;
  }
}

/// `ring` with `count` fresh variables prepended as the most significant block.
inline RingPtr extend_front(const RingPtr& ring, std::size_t count, MonomialOrder order) {
  std::vector<std::string> names;
  std::vector<std::string> vars = ring->variables();
  for (std::size_t i = 0; i < count; ++i) {
    RingContext probe(vars, MonomialOrder::grevlex(), ring->field(), ring->pi_mode());
    std::string name = fresh_variable_name(probe);
    vars.insert(vars.begin(), name);
  }
  return make_ring_context(std::move(vars), order, ring->field(), ring->pi_mode());
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_ring(*b)) throw ContextMismatch("operands belong to different rings");
}

}  // namespace lmv
