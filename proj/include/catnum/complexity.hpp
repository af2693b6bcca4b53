#pragma once

// Representation complexity: node counts, Catalan numbers, fixed-size
// enumeration, best and worst cases, the dual involution and tree depths.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "catnum/arith_block.hpp"
#include "catnum/core.hpp"
#include "catnum/natref.hpp"

namespace catnum {

/// Number of pair nodes.
template <Catalan V>
V catsize(const V& z) {
  if (z.is_empty()) return z;
  auto [x, y] = z.unpair();
  return successor(add(catsize(x), catsize(y)));
}

/// C_k, through C_k = 2(2k-1) C_{k-1} / (k+1).
NatRef catalan_number(unsigned k);

/// Applies f n(k) times to x.
template <Catalan V, class T, class F>
T iterated(F&& f, V k, T x) {
  for (; !k.is_empty(); k = predecessor(k)) x = f(x);
  return x;
}

/// Left-leaning tower c(c(...c(e,e)...,e),e): 2^2^...^2 - 1, k levels.
template <Catalan V>
V best_case(V k) {
  V x = V::empty();
  for (; !k.is_empty(); k = predecessor(k)) x = V::pair(x, V::empty());
  return x;
}

/// Right-leaning chain c(e, c(e, ... c(e,e))).
template <Catalan V>
V worst_case(V k) {
  V x = V::empty();
  for (; !k.is_empty(); k = predecessor(k)) x = V::pair(V::empty(), x);
  return x;
}

/// Swaps the two components of every pair node. An involution.
template <Catalan V>
V dual(const V& z) {
  // Iterate along the left spine, since dual turns it into the right spine
  // of the result; only right subtrees recurse.
  std::vector<V> rights;
  V cur = z;
  while (!cur.is_empty()) {
    auto [x, y] = cur.unpair();
    rights.push_back(std::move(y));
    cur = std::move(x);
  }
  V acc = V::empty();
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) acc = V::pair(dual(*it), acc);
  return acc;
}

namespace detail {

template <Catalan V>
V max2(const V& x, const V& y) {
  return compare(x, y) == Ordering::LT ? y : x;
}

}  // namespace detail

/// Longest root-to-leaf path in the binary view.
template <Catalan V>
V max_tdepth(const V& z) {
  if (z.is_empty()) return z;
  auto [x, y] = z.unpair();
  return successor(detail::max2(max_tdepth(x), max_tdepth(y)));
}

/// Longest root-to-leaf path in the multiway view.
template <Catalan V>
V max_mdepth(const V& z) {
  if (z.is_empty()) return z;
  V deepest = V::empty();
  for (const V& child : to_list(z)) deepest = detail::max2(max_mdepth(child), deepest);
  return successor(deepest);
}

/// All values of catsize k in increasing order, for k <= cap.
///
/// The values are generated structurally and sorted with compare: for k >= 5
/// the largest of them is a tower 2^2^...-1 that no successor scan reaches.
/// Throws Error(CapExceeded) when k > cap.
template <Catalan V>
std::vector<V> enumerate_catsized(unsigned k, unsigned cap = 10);

/// Reference enumeration: filter the successor stream by catsize and take
/// the first C_k matches. Only practical for k <= 4.
template <Catalan V>
std::vector<V> enumerate_catsized_by_scan(unsigned k) {
  const NatRef want_count = catalan_number(k);
  const std::size_t count = static_cast<std::size_t>(want_count.to_u64());
  V target = V::empty();
  for (unsigned i = 0; i < k; ++i) target = successor(target);
  std::vector<V> out;
  for (V x = V::empty(); out.size() < count; x = successor(x)) {
    if (catsize(x) == target) out.push_back(x);
  }
  return out;
}

namespace detail {

template <Catalan V>
void all_shapes(unsigned k, std::vector<std::vector<V>>& memo) {
  if (memo.size() > k) return;
  for (unsigned n = static_cast<unsigned>(memo.size()); n <= k; ++n) {
    std::vector<V> level;
    if (n == 0) {
      level.push_back(V::empty());
    } else {
      for (unsigned left = 0; left < n; ++left) {
        for (const V& l : memo[left]) {
          for (const V& r : memo[n - 1 - left]) level.push_back(V::pair(l, r));
        }
      }
    }
    memo.push_back(std::move(level));
  }
}

}  // namespace detail

template <Catalan V>
std::vector<V> enumerate_catsized(unsigned k, unsigned cap) {
  if (k > cap) {
    throw Error(ErrorKind::CapExceeded,
                "enumeration size " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<V>> memo;
  detail::all_shapes<V>(k, memo);
  std::vector<V> out = std::move(memo[k]);
  std::sort(out.begin(), out.end(),
            [](const V& a, const V& b) { return compare(a, b) == Ordering::LT; });
  return out;
}

}  // namespace catnum
