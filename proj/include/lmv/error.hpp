#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands come from different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands live in different polynomial rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter violates a precondition (odd prime, signature, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A rational constant has no image in the target field (denominator divisible by p).
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a Groebner computation hits its pair ceiling. Never a wrong answer.
class ResourceExhausted : public Error {
 public:
  explicit ResourceExhausted(std::size_t pairs_processed)
      : Error("resource-exhausted: pair ceiling reached after " +
              std::to_string(pairs_processed) + " pairs"),
        pairs_processed_(pairs_processed) {}
  std::size_t pairs_processed() const noexcept { return pairs_processed_; }

 private:
  std::size_t pairs_processed_;
};

}  // namespace lmv
