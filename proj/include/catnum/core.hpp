#pragma once

// The Catalan-family contract every number representation realizes, and the
// structural utilities written once against it.

#include <algorithm>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "catnum/error.hpp"

namespace catnum {

/// A member of the Catalan family: a distinguished empty value plus a
/// bijection `pair : V x V -> V \ {empty}` with inverse `unpair`.
template <class V>
concept Catalan = std::copyable<V> && std::equality_comparable<V> && requires(const V& x) {
  { V::empty() } -> std::same_as<V>;
  { V::pair(x, x) } -> std::same_as<V>;
  { x.unpair() } -> std::same_as<std::pair<V, V>>;
  { x.is_empty() } -> std::convertible_to<bool>;
};

/// Instances that keep the parity bit in each node expose it here.
template <class V>
concept CachesParity = Catalan<V> && requires(const V& x) {
  { x.is_odd() } -> std::convertible_to<bool>;
};

/// Instances whose children can be borrowed without copying.
template <class V>
concept BorrowsParts = Catalan<V> && requires(const V& x) {
  { x.left() } -> std::same_as<const V&>;
  { x.right() } -> std::same_as<const V&>;
};

/// unpair for hot paths; borrows the children when the instance allows it,
/// in which case they live as long as z. Precondition: !z.is_empty().
template <Catalan V>
auto parts(const V& z) {
  if constexpr (BorrowsParts<V>) {
    return std::pair<const V&, const V&>(z.left(), z.right());
  } else {
    return z.unpair();
  }
}

template <Catalan V>
V empty() {
  return V::empty();
}

template <Catalan V>
V pair(const V& x, const V& y) {
  return V::pair(x, y);
}

template <Catalan V>
std::pair<V, V> unpair(const V& z) {
  return z.unpair();
}

template <Catalan V>
bool is_empty(const V& x) {
  return x.is_empty();
}

template <Catalan V>
bool is_pair(const V& x) {
  return !x.is_empty();
}

/// Children of `x` in the multiway view: repeated unpair on the second
/// component until empty.
template <Catalan V>
std::vector<V> to_list(V x) {
  std::vector<V> out;
  while (!x.is_empty()) {
    auto [head, tail] = x.unpair();
    out.push_back(std::move(head));
    x = std::move(tail);
  }
  return out;
}

/// Right fold of pair over `blocks`, ending in empty.
template <Catalan V>
V from_list(const std::vector<V>& blocks) {
  V acc = V::empty();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) acc = V::pair(*it, acc);
  return acc;
}

namespace detail {

template <Catalan V>
void cat_show_into(const V& x, std::string& out) {
  out.push_back('(');
  for (const V& child : to_list(x)) cat_show_into(child, out);
  out.push_back(')');
}

}  // namespace detail

/// Balanced-parenthesis rendering of the multiway view. "()" for empty.
template <Catalan V>
std::string cat_show(const V& x) {
  std::string out;
  detail::cat_show_into(x, out);
  return out;
}

/// Structure-preserving map between two instances. Recurses on the
/// multiway children, so stack depth follows the multiway depth only.
template <Catalan To, Catalan From>
To view(const From& x) {
  std::vector<From> children = to_list(x);
  To acc = To::empty();
  for (auto it = children.rbegin(); it != children.rend(); ++it) {
    acc = To::pair(view<To>(*it), acc);
  }
  return acc;
}

}  // namespace catnum
