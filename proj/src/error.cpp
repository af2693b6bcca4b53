#include "catnum/error.hpp"

namespace catnum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyDeconstruction: return "EmptyDeconstruction";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::ZeroPredecessor: return "ZeroPredecessor";
    case ErrorKind::OddHalf: return "OddHalf";
    case ErrorKind::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorKind::Underflow: return "Underflow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

}  // namespace catnum
