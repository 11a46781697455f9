#pragma once

#include <stdexcept>
#include <string>

namespace mono {

enum class ErrorKind {
  Domain,
  Overflow,
  UnsupportedPrime,
  OutOfRange,
  Parse,
  BudgetExhausted,
  InternalInvariant,
};

const char* error_kind_name(ErrorKind kind) noexcept;

/// Structured failure raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace mono
