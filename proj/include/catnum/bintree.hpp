#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <new>
#include <string>
#include <string_view>
#include <utility>

namespace catnum {

/// Ordered rooted binary tree with empty leaves: `E | C left right`.
///
/// Nodes are immutable and shared through an intrusive atomic count, so
/// values may be read from several threads at once. Each node caches the
/// parity of the natural number it encodes: C x y is odd iff y is even, and
/// E is even.
class BinTree {
 public:
  BinTree() = default;
  BinTree(const BinTree& other) noexcept : node_(other.node_) { retain(node_); }
  BinTree(BinTree&& other) noexcept : node_(other.node_) { other.node_ = nullptr; }
  BinTree& operator=(const BinTree& other) noexcept {
    retain(other.node_);
    release(node_);
    node_ = other.node_;
    return *this;
  }
  BinTree& operator=(BinTree&& other) noexcept {
    if (this != &other) {
      release(node_);
      node_ = other.node_;
      other.node_ = nullptr;
    }
    return *this;
  }
  ~BinTree() { release(node_); }

  static BinTree empty() { return BinTree(); }
  static BinTree pair(BinTree x, BinTree y);
  /// The shared node for 1.
  static const BinTree& unit();

  /// Throws Error(EmptyDeconstruction) on E.
  std::pair<BinTree, BinTree> unpair() const;

  bool is_empty() const noexcept { return node_ == nullptr; }
  bool is_odd() const noexcept;

  /// Unchecked accessors; precondition: !is_empty().
  const BinTree& left() const noexcept;
  const BinTree& right() const noexcept;

  /// Identity of the shared node, for DAG folding. Null for E.
  const void* identity() const noexcept { return node_; }

  friend bool operator==(const BinTree& a, const BinTree& b) noexcept {
    return a.node_ == b.node_ || equal_slow(a, b);
  }

  /// Constructor-application text, e.g. "C E (C E E)".
  std::string to_string() const;
  /// Inverse of to_string. Throws Error(MalformedWord).
  static BinTree parse(std::string_view text);

 private:
  struct Node;
  explicit BinTree(Node* node) noexcept : node_(node) {}

  static bool equal_slow(const BinTree& a, const BinTree& b) noexcept;
  static void retain(Node* node) noexcept;
  static void release(Node* node) noexcept;
  // Frees iteratively, so dropping a long spine does not recurse.
  static void destroy(Node* node) noexcept;

  Node* node_ = nullptr;
};

struct BinTree::Node {
  BinTree left;
  BinTree right;
  std::atomic<std::uint32_t> refs;
  bool odd;
};

inline void BinTree::retain(Node* node) noexcept {
  if (node) node->refs.fetch_add(1, std::memory_order_relaxed);
}

inline void BinTree::release(Node* node) noexcept {
  // A count of one means no other thread holds the node, so the locked
  // decrement can be skipped.
  if (!node) return;
  if (node->refs.load(std::memory_order_acquire) == 1 ||
      node->refs.fetch_sub(1, std::memory_order_acq_rel) == 1) {
    destroy(node);
  }
}

namespace detail {

// Per-thread free list of node-sized blocks. A block freed on another
// thread just joins that thread's list. Chunks are never returned.
union NodeSlot {
  NodeSlot* next;
  alignas(alignof(std::max_align_t)) unsigned char bytes[sizeof(BinTree) * 2 + 8];
};

inline thread_local NodeSlot* free_node_slots = nullptr;

NodeSlot* refill_node_slots();

inline void* take_node_slot() {
  NodeSlot* s = free_node_slots ? free_node_slots : refill_node_slots();
  free_node_slots = s->next;
  return s;
}

inline void give_node_slot(void* p) noexcept {
  NodeSlot* s = static_cast<NodeSlot*>(p);
  s->next = free_node_slots;
  free_node_slots = s;
}

}  // namespace detail

inline BinTree BinTree::pair(BinTree x, BinTree y) {
  static_assert(sizeof(Node) <= sizeof(detail::NodeSlot));
  const bool odd = !y.is_odd();
  return BinTree(new (detail::take_node_slot()) Node{std::move(x), std::move(y), {1}, odd});
}

inline bool BinTree::is_odd() const noexcept { return node_ && node_->odd; }
inline const BinTree& BinTree::left() const noexcept { return node_->left; }
inline const BinTree& BinTree::right() const noexcept { return node_->right; }

}  // namespace catnum
