#include "catnum/multitree.hpp"

#include <cctype>

#include "catnum/error.hpp"

namespace catnum {

MultiTree MultiTree::pair(const MultiTree& x, const MultiTree& y) {
  return MultiTree(std::make_shared<const Cell>(Cell{x, y, !y.is_odd()}));
}

std::pair<MultiTree, MultiTree> MultiTree::unpair() const {
  if (!first_) throw Error(ErrorKind::EmptyDeconstruction, "unpair of F []");
  return {first_->head, first_->rest};
}

std::vector<MultiTree> MultiTree::children() const {
  std::vector<MultiTree> out;
  for (const Cell* c = first_.get(); c; c = c->rest.first_.get()) out.push_back(c->head);
  return out;
}

std::size_t MultiTree::child_count() const noexcept {
  std::size_t n = 0;
  for (const Cell* c = first_.get(); c; c = c->rest.first_.get()) ++n;
  return n;
}

std::size_t MultiTree::node_count() const {
  std::size_t n = 1;
  for (const Cell* c = first_.get(); c; c = c->rest.first_.get()) n += c->head.node_count();
  return n;
}

bool operator==(const MultiTree& a, const MultiTree& b) noexcept {
  const MultiTree::Cell* x = a.first_.get();
  const MultiTree::Cell* y = b.first_.get();
  while (true) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->odd != y->odd) return false;
    if (!(x->head == y->head)) return false;
    x = x->rest.first_.get();
    y = y->rest.first_.get();
  }
}

namespace {

void show_into(const MultiTree& t, std::string& out) {
  out += "F [";
  bool first = true;
  for (const MultiTree& child : t.children()) {
    if (!first) out += ',';
    first = false;
    show_into(child, out);
  }
  out += ']';
}

class ForestParser {
 public:
  explicit ForestParser(std::string_view text) : text_(text) {}

  MultiTree parse_all() {
    MultiTree t = node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  // node := 'F' '[' (node (',' node)*)? ']' | '(' node ')'
  MultiTree node() {
    skip_ws();
    if (eat('(')) {
      MultiTree t = node();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (!eat('F')) fail("expected 'F'");
    skip_ws();
    if (!eat('[')) fail("expected '['");
    std::vector<MultiTree> kids;
    skip_ws();
    if (!eat(']')) {
      do {
        kids.push_back(node());
        skip_ws();
      } while (eat(','));
      if (!eat(']')) fail("expected ']'");
    }
    MultiTree acc;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) acc = MultiTree::pair(*it, acc);
    return acc;
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

  [[noreturn]] void fail(const char* msg) const {
    throw Error(ErrorKind::MalformedWord,
                std::string(msg) + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string MultiTree::to_string() const {
  std::string out;
  show_into(*this, out);
  return out;
}

MultiTree MultiTree::parse(std::string_view text) { return ForestParser(text).parse_all(); }

}  // namespace catnum
