#include "catnum/expr.hpp"

#include <cctype>
#include <functional>
#include <span>

#include "catnum/catnum.hpp"

namespace catnum {

namespace {

using Args = std::span<const BinTree>;
using OpFn = std::function<BinTree(Args)>;

struct Operation {
  std::string_view name;
  std::size_t arity;
  OpFn fn;
};

template <class F>
Operation unary(std::string_view name, F f) {
  return {name, 1, [f](Args a) { return f(a[0]); }};
}

template <class F>
Operation binary(std::string_view name, F f) {
  return {name, 2, [f](Args a) { return f(a[0], a[1]); }};
}

Operation prime(PrimeKind kind) {
  return {to_string(kind), 0, [kind](Args) { return record_prime<BinTree>(kind); }};
}

const std::vector<Operation>& operations() {
  using T = BinTree;
  static const std::vector<Operation> ops = [] {
    std::vector<Operation> v = {
        unary("successor", [](const T& x) { return successor(x); }),
        unary("predecessor", [](const T& x) { return predecessor(x); }),
        binary("add", [](const T& x, const T& y) { return add(x, y); }),
        binary("sub", [](const T& x, const T& y) { return sub(x, y); }),
        binary("mul", [](const T& x, const T& y) { return mul(x, y); }),
        binary("divide", [](const T& x, const T& y) { return divide(x, y); }),
        binary("remainder", [](const T& x, const T& y) { return remainder(x, y); }),
        binary("pow", [](const T& x, const T& y) { return pow(x, y); }),
        unary("square", [](const T& x) { return square(x); }),
        unary("exp2", [](const T& x) { return exp2(x); }),
        unary("log2", [](const T& x) { return log2(x); }),
        unary("double", [](const T& x) { return twice(x); }),
        unary("half", [](const T& x) { return half(x); }),
        binary("leftshift", [](const T& x, const T& y) { return leftshift_by(x, y); }),
        binary("rightshift", [](const T& x, const T& y) { return rightshift_by(x, y); }),
        unary("bitsize", [](const T& x) { return bitsize(x); }),
        unary("ilog2", [](const T& x) { return ilog2(x); }),
        unary("catsize", [](const T& x) { return catsize(x); }),
        unary("max_tdepth", [](const T& x) { return max_tdepth(x); }),
        unary("max_mdepth", [](const T& x) { return max_mdepth(x); }),
        unary("dual", [](const T& x) { return dual(x); }),
        unary("best_case", [](const T& x) { return best_case(x); }),
        unary("tower", [](const T& x) { return best_case(x); }),
        unary("worst_case", [](const T& x) { return worst_case(x); }),
        binary("cons", [](const T& x, const T& y) { return cons(x, y); }),
        unary("hd", [](const T& x) { return hd(x); }),
        unary("tl", [](const T& x) { return tl(x); }),
        unary("syracuse", [](const T& x) { return syracuse(x); }),
    };
    for (PrimeKind k : kAllPrimeKinds) v.push_back(prime(k));
    return v;
  }();
  return ops;
}

const Operation* find_operation(std::string_view name) {
  for (const Operation& op : operations()) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

class Parser {
 public:
  Parser(std::string_view text, const ExprOptions& options) : text_(text), options_(options) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  Expr expr() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return call();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Expr e;
    e.kind = Expr::Kind::Literal;
    e.offset = start;
    e.literal = NatRef::parse(text_.substr(start, pos_ - start));
    if (e.literal > options_.literal_cap) {
      throw ExprError(ExprErrorKind::LiteralTooLarge, start,
                      "literal exceeds " + options_.literal_cap.to_string());
    }
    return e;
  }

  Expr call() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    Expr e;
    e.kind = Expr::Kind::Call;
    e.offset = start;
    e.name = std::string(text_.substr(start, pos_ - start));
    const Operation* op = find_operation(e.name);
    if (!op) throw ExprError(ExprErrorKind::UnknownName, start, "unknown operation '" + e.name + "'");
    skip_ws();
    if (!eat('(')) fail("expected '(' after '" + e.name + "'");
    skip_ws();
    if (!eat(')')) {
      do {
        e.args.push_back(expr());
        skip_ws();
      } while (eat(','));
      if (!eat(')')) fail("expected ',' or ')'");
    }
    if (e.args.size() != op->arity) {
      throw ExprError(ExprErrorKind::Arity, start,
                      "'" + e.name + "' takes " + std::to_string(op->arity) + " argument(s), got " +
                          std::to_string(e.args.size()));
    }
    return e;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprError(ExprErrorKind::Parse, pos_, msg);
  }

  std::string_view text_;
  const ExprOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprError::ExprError(ExprErrorKind kind, std::size_t offset, const std::string& msg)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + msg),
      kind_(kind),
      offset_(offset) {}

EvalError::EvalError(const Error& cause, std::string subexpression)
    : Error(cause.kind(), std::string(cause.what()) + " in " + subexpression, Verbatim{}),
      subexpression_(std::move(subexpression)) {}

std::string Expr::to_string() const {
  if (kind == Kind::Literal) return literal.to_string();
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i].to_string();
  }
  return out + ")";
}

std::size_t Expr::depth() const {
  if (kind == Kind::Literal) return 0;
  std::size_t d = 0;
  for (const Expr& a : args) d = std::max(d, a.depth());
  return d + 1;
}

Expr parse_expr(std::string_view text, const ExprOptions& options) {
  return Parser(text, options).parse();
}

BinTree eval(const Expr& e) {
  if (e.kind == Expr::Kind::Literal) return from_nat<BinTree>(e.literal);
  const Operation* op = find_operation(e.name);
  if (!op || op->arity != e.args.size()) {
    throw ExprError(op ? ExprErrorKind::Arity : ExprErrorKind::UnknownName, e.offset,
                    "bad call to '" + e.name + "'");
  }
  std::vector<BinTree> args;
  args.reserve(e.args.size());
  for (const Expr& a : e.args) args.push_back(eval(a));
  try {
    return op->fn(args);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& err) {
    throw EvalError(err, e.to_string());
  }
}

const std::vector<OperationInfo>& registered_operations() {
  static const std::vector<OperationInfo> infos = [] {
    std::vector<OperationInfo> v;
    for (const Operation& op : operations()) v.push_back({op.name, op.arity});
    return v;
  }();
  return infos;
}

}  // namespace catnum
