#include "catnum/bintree.hpp"

#include <cctype>
#include <iterator>
#include <new>
#include <vector>

#include "catnum/error.hpp"

namespace catnum {

namespace detail {

NodeSlot* refill_node_slots() {
  constexpr std::size_t kChunkSlots = 4096;
  auto* chunk = static_cast<NodeSlot*>(::operator new(sizeof(NodeSlot) * kChunkSlots));
  for (std::size_t i = 0; i < kChunkSlots; ++i) {
    chunk[i].next = free_node_slots;
    free_node_slots = &chunk[i];
  }
  return free_node_slots;
}

}  // namespace detail

const BinTree& BinTree::unit() {
  // Never destroyed, so it outlives every other static.
  static const BinTree* u = new BinTree(pair(BinTree(), BinTree()));
  return *u;
}

void BinTree::destroy(Node* n) noexcept {
  // Pending nodes are stacked in the slots of nodes already freed.
  struct Cell {
    Node* node;
    Cell* next;
  };
  static_assert(sizeof(Cell) <= sizeof(detail::NodeSlot));
  auto dies = [](Node* c) {
    return c && (c->refs.load(std::memory_order_acquire) == 1 ||
                 c->refs.fetch_sub(1, std::memory_order_acq_rel) == 1);
  };
  Cell* stack = nullptr;
  while (true) {
    // The children are taken over here, so the dead node is not destructed;
    // its slot is simply reused.
    Node* l = n->left.node_;
    Node* r = n->right.node_;
    const bool l_dies = dies(l);
    const bool r_dies = dies(r);
    if (l_dies && r_dies) {
      stack = new (static_cast<void*>(n)) Cell{r, stack};
      n = l;
      continue;
    }
    detail::give_node_slot(n);
    if (l_dies) {
      n = l;
    } else if (r_dies) {
      n = r;
    } else if (stack) {
      Cell* top = stack;
      n = top->node;
      stack = top->next;
      detail::give_node_slot(top);
    } else {
      return;
    }
  }
}

std::pair<BinTree, BinTree> BinTree::unpair() const {
  if (!node_) throw Error(ErrorKind::EmptyDeconstruction, "unpair of E");
  return {node_->left, node_->right};
}

bool BinTree::equal_slow(const BinTree& a, const BinTree& b) noexcept {
  const BinTree* x = &a;
  const BinTree* y = &b;
  // Walk the right spine iteratively; recurse on left subtrees.
  while (true) {
    if (x->node_ == y->node_) return true;
    if (!x->node_ || !y->node_) return false;
    if (x->node_->odd != y->node_->odd) return false;
    if (!(x->node_->left == y->node_->left)) return false;
    x = &x->node_->right;
    y = &y->node_->right;
  }
}

namespace {

void show_into(const BinTree& t, std::string& out, bool nested) {
  if (t.is_empty()) {
    out += 'E';
    return;
  }
  if (nested) out += '(';
  out += "C ";
  show_into(t.left(), out, true);
  out += ' ';
  show_into(t.right(), out, true);
  if (nested) out += ')';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  BinTree parse_all() {
    BinTree t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  // term := 'E' | 'C' atom atom | '(' term ')'
  BinTree term() {
    skip_ws();
    if (eat('C')) {
      BinTree l = atom();
      BinTree r = atom();
      return BinTree::pair(l, r);
    }
    return atom();
  }

  BinTree atom() {
    skip_ws();
    if (eat('E')) return BinTree::empty();
    if (eat('(')) {
      BinTree t = term();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    fail("expected 'E', 'C' or '('");
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

std::string BinTree::to_string() const {
  std::string out;
  show_into(*this, out, false);
  return out;
}

BinTree BinTree::parse(std::string_view text) { return TreeParser(text).parse_all(); }

}  // namespace catnum
