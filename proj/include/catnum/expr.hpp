#pragma once

// Prefix-call expression language for the command line:
//
//   expr    := literal | name '(' [expr (',' expr)*] ')'
//   literal := decimal digits
//
// Evaluation runs on BinTree.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catnum/bintree.hpp"
#include "catnum/error.hpp"
#include "catnum/natref.hpp"

namespace catnum {

struct Expr {
  enum class Kind { Literal, Call };
  Kind kind = Kind::Literal;
  NatRef literal;
  std::string name;
  std::vector<Expr> args;
  std::size_t offset = 0;  // position in the source text

  /// Canonical text, e.g. "add(10,5)".
  std::string to_string() const;
  /// Call nesting depth; 0 for a literal.
  std::size_t depth() const;
};

enum class ExprErrorKind { Parse, Arity, UnknownName, LiteralTooLarge };

class ExprError : public std::runtime_error {
 public:
  ExprError(ExprErrorKind kind, std::size_t offset, const std::string& msg);
  ExprErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ExprErrorKind kind_;
  std::size_t offset_;
};

/// An arithmetic error raised while evaluating `subexpression`.
class EvalError : public Error {
 public:
  EvalError(const Error& cause, std::string subexpression);
  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

struct ExprOptions {
  /// Literals above this value are rejected. Default 2^64.
  NatRef literal_cap = NatRef(mpz_class(1) << 64);
};

Expr parse_expr(std::string_view text, const ExprOptions& options = {});

/// Throws EvalError naming the innermost failing call.
BinTree eval(const Expr& e);

/// Names accepted in call position, with their arity.
struct OperationInfo {
  std::string_view name;
  std::size_t arity;
};
const std::vector<OperationInfo>& registered_operations();

}  // namespace catnum
