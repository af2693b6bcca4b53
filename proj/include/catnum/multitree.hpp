#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catnum {

/// Ordered rooted multiway tree with empty leaves: `F [children]`.
///
/// The child sequence is a persistent cons list, so pair (prepend a child)
/// and unpair (split off the first child) are O(1) and share the tail.
class MultiTree {
 public:
  MultiTree() = default;

  static MultiTree empty() { return MultiTree(); }
  /// pair(x, F xs) = F (x:xs)
  static MultiTree pair(const MultiTree& x, const MultiTree& y);
  /// unpair(F (x:xs)) = (x, F xs). Throws Error(EmptyDeconstruction) on F [].
  std::pair<MultiTree, MultiTree> unpair() const;

  bool is_empty() const noexcept { return first_ == nullptr; }
  /// Odd iff the node has an odd number of children.
  bool is_odd() const noexcept;

  std::vector<MultiTree> children() const;
  std::size_t child_count() const noexcept;
  /// Number of F nodes in the whole tree, root included.
  std::size_t node_count() const;

  friend bool operator==(const MultiTree& a, const MultiTree& b) noexcept;

  /// Constructor-application text, e.g. "F [F [],F []]".
  std::string to_string() const;
  /// Inverse of to_string. Throws Error(MalformedWord).
  static MultiTree parse(std::string_view text);

 private:
  struct Cell;
  explicit MultiTree(std::shared_ptr<const Cell> first) : first_(std::move(first)) {}

  std::shared_ptr<const Cell> first_;
};

struct MultiTree::Cell {
  MultiTree head;
  MultiTree rest;  // F xs, the remaining siblings
  bool odd;
};

inline bool MultiTree::is_odd() const noexcept { return first_ && first_->odd; }

}  // namespace catnum
