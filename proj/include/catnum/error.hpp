#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catnum {

enum class ErrorKind {
  EmptyDeconstruction,
  MalformedWord,
  ZeroPredecessor,
  OddHalf,
  NotPowerOfTwo,
  Underflow,
  DivisionByZero,
  SizeGuard,
  CapExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every library operation whose precondition does not hold.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 protected:
  struct Verbatim {};
  // Keeps `message` as is, for wrappers whose cause already carries the prefix.
  Error(ErrorKind kind, const std::string& message, Verbatim)
      : std::runtime_error(message), kind_(kind) {}

 private:
  ErrorKind kind_;
};

}  // namespace catnum
