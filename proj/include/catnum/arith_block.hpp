#pragma once

// Shifts, addition, subtraction, comparison and bitsize. These functions are
// mutually recursive and each works on one run-length block at a time, so
// their cost follows the number of blocks rather than the number of bits.

#include <type_traits>

#include <boost/container/small_vector.hpp>

#include "catnum/arith_basic.hpp"
#include "catnum/core.hpp"

namespace catnum {

enum class Ordering { LT, EQ, GT };

template <Catalan V>
V add(const V& x, const V& y);
template <Catalan V>
V sub(const V& x, const V& y);
template <Catalan V>
Ordering compare(const V& x, const V& y);
template <Catalan V>
V bitsize(const V& z);

namespace detail {
template <Catalan V>
V sub_unchecked(const V& x, const V& y);
}  // namespace detail

/// 2^x * y.
template <Catalan V>
V leftshift_by(const V& x, const V& y) {
  if (x.is_empty()) return y;
  if (y.is_empty()) return V::empty();
  // A leading one-block gets a zero-block of size x in front of it.
  if (is_odd(y)) return V::pair(predecessor(x), y);
  // A leading zero-block grows by x.
  auto [a, rest] = parts(y);
  return V::pair(add(x, a), rest);
}

/// (t -> 2t+1)^x (k) = 2^x * (k+1) - 1.
template <Catalan V>
V leftshift_by1(const V& x, const V& k) {
  if (x.is_empty()) return k;
  // An even k gets a one-block of size x in front of it.
  if (is_even(k)) return V::pair(predecessor(x), k);
  // A leading one-block grows by x.
  auto [a, rest] = parts(k);
  return V::pair(add(x, a), rest);
}

/// (t -> 2t+2)^x (k) = 2^x * (k+2) - 2, as twice the (x-1)-fold 2t+1
/// iterate of k+1.
template <Catalan V>
V leftshift_by2(const V& x, const V& k) {
  if (x.is_empty()) return k;
  return twice(leftshift_by1(predecessor(x), successor(k)));
}

namespace detail {

// The shifts by a block of length a+1, where a is the stored component of
// a pair node. They skip the successor/predecessor round trip on a.

template <Catalan V>
V shift_block(const V& a, const V& y) {
  if (y.is_empty()) return V::empty();
  if (is_odd(y)) return V::pair(a, y);
  auto [b, rest] = parts(y);
  return V::pair(add(successor(a), b), rest);
}

template <Catalan V>
V shift_block1(const V& a, const V& k) {
  if (is_even(k)) return V::pair(a, k);
  auto [b, rest] = parts(k);
  return V::pair(add(successor(a), b), rest);
}

template <Catalan V>
V shift_block2(const V& a, const V& k) {
  return twice(leftshift_by1(a, successor(k)));
}

}  // namespace detail

namespace detail {

/// The same two iterates through successor and predecessor around
/// leftshift_by. Slower; kept to check the block forms against.
template <Catalan V>
V leftshift_by1_reference(const V& x, const V& k) {
  return predecessor(leftshift_by(x, successor(k)));
}

template <Catalan V>
V leftshift_by2_reference(const V& x, const V& k) {
  return predecessor(predecessor(leftshift_by(x, successor(successor(k)))));
}

}  // namespace detail

template <Catalan V>
V add(const V& x, const V& y) {
  if (x.is_empty()) return y;
  if (y.is_empty()) return x;
  const bool x_odd = is_odd(x);
  const bool y_odd = is_odd(y);
  if (x_odd && !y_odd) return add(y, x);

  auto [a, as] = parts(x);
  auto [b, bs] = parts(y);
  const Ordering ord = compare(a, b);
  using detail::sub_unchecked;

  if (!x_odd && !y_odd) {
    // Two zero-blocks: trim the longer one so both have equal length.
    switch (ord) {
      case Ordering::EQ: return detail::shift_block(a, add(as, bs));
      case Ordering::GT:
        return detail::shift_block(b, add(leftshift_by(sub_unchecked(a, b), as), bs));
      case Ordering::LT:
        return detail::shift_block(a, add(as, leftshift_by(sub_unchecked(b, a), bs)));
    }
  }
  if (!x_odd && y_odd) {
    // A zero-block plus a one-block is a one-block.
    switch (ord) {
      case Ordering::EQ: return detail::shift_block1(a, add(as, bs));
      case Ordering::GT:
        return detail::shift_block1(b, add(leftshift_by(sub_unchecked(a, b), as), bs));
      case Ordering::LT:
        return detail::shift_block1(a, add(as, leftshift_by1(sub_unchecked(b, a), bs)));
    }
  }
  // Two one-blocks: f^k(x) + f^k(y) = g^k(x + y) with f(t) = 2t+1, g(t) = 2t+2.
  switch (ord) {
    case Ordering::EQ: return detail::shift_block2(a, add(as, bs));
    case Ordering::GT:
      return detail::shift_block2(b, add(leftshift_by1(sub_unchecked(a, b), as), bs));
    case Ordering::LT:
      return detail::shift_block2(a, add(as, leftshift_by1(sub_unchecked(b, a), bs)));
  }
  return V::empty();  // unreachable
}

namespace detail {

/// x - y assuming x >= y.
template <Catalan V>
V sub_unchecked(const V& x, const V& y) {
  if (y.is_empty()) return x;
  const bool x_odd = is_odd(x);
  const bool y_odd = is_odd(y);
  auto [a, as] = parts(x);
  auto [b, bs] = parts(y);
  const Ordering ord = compare(a, b);

  if (!x_odd && !y_odd) {
    switch (ord) {
      case Ordering::EQ: return detail::shift_block(a, sub_unchecked(as, bs));
      case Ordering::GT:
        return detail::shift_block(b, sub_unchecked(leftshift_by(sub_unchecked(a, b), as), bs));
      case Ordering::LT:
        return detail::shift_block(a, sub_unchecked(as, leftshift_by(sub_unchecked(b, a), bs)));
    }
  }
  if (x_odd && y_odd) {
    // One-block minus one-block is a zero-block.
    switch (ord) {
      case Ordering::EQ: return detail::shift_block(a, sub_unchecked(as, bs));
      case Ordering::GT:
        return leftshift_by(successor(b),
                            sub_unchecked(leftshift_by1(sub_unchecked(a, b), as), bs));
      case Ordering::LT:
        return leftshift_by(successor(a),
                            sub_unchecked(as, leftshift_by1(sub_unchecked(b, a), bs)));
    }
  }
  if (x_odd && !y_odd) {
    // One-block minus zero-block is a one-block.
    switch (ord) {
      case Ordering::EQ: return detail::shift_block1(a, sub_unchecked(as, bs));
      case Ordering::GT:
        return leftshift_by1(successor(b),
                             sub_unchecked(leftshift_by1(sub_unchecked(a, b), as), bs));
      case Ordering::LT:
        return leftshift_by1(successor(a),
                             sub_unchecked(as, leftshift_by(sub_unchecked(b, a), bs)));
    }
  }
  // Zero-block minus one-block, through the identity dual to the odd/odd
  // addition case; sub1(u, v) = u - v - 1.
  auto sub1 = [](const V& u, const V& v) { return predecessor(sub_unchecked(u, v)); };
  switch (ord) {
    case Ordering::EQ: return successor(detail::shift_block(a, sub1(as, bs)));
    case Ordering::GT:
      return successor(
          detail::shift_block(b, sub1(leftshift_by(sub_unchecked(a, b), as), bs)));
    case Ordering::LT:
      return successor(
          detail::shift_block(a, sub1(as, leftshift_by1(sub_unchecked(b, a), bs))));
  }
  return V::empty();  // unreachable
}

/// Blocks of x, least significant first. Small values stay on the stack,
/// and borrowing instances hold references into x instead of copies.
template <Catalan V>
using BlockBuffer =
    boost::container::small_vector<std::conditional_t<BorrowsParts<V>, const V*, V>, 16>;

template <Catalan V>
const V& block_at(const V* p) {
  return *p;
}

template <Catalan V>
const V& block_at(const V& v) {
  return v;
}

template <Catalan V>
BlockBuffer<V> blocks_of(const V& z) {
  BlockBuffer<V> out;
  if constexpr (BorrowsParts<V>) {
    for (const V* cur = &z; !cur->is_empty(); cur = &cur->right()) out.push_back(&cur->left());
  } else {
    V x = z;
    while (!x.is_empty()) {
      auto [head, tail] = x.unpair();
      out.push_back(std::move(head));
      x = std::move(tail);
    }
  }
  return out;
}

/// Big-endian block comparison of two values of equal bitsize, walking
/// both block lists from the most significant end. Both leading blocks are
/// one-blocks, and the kinds alternate in step since the lengths match
/// until the first difference.
template <Catalan V>
Ordering compare_big_first(const BlockBuffer<V>& xs, const BlockBuffer<V>& ys) {
  bool ones = true;
  auto x = xs.rbegin();
  auto y = ys.rbegin();
  for (; x != xs.rend() && y != ys.rend(); ++x, ++y, ones = !ones) {
    const Ordering ord = compare(block_at<V>(*x), block_at<V>(*y));
    if (ord == Ordering::EQ) continue;
    // A longer run of ones is larger; a longer run of zeros is smaller.
    if (ones) return ord;
    return ord == Ordering::LT ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

/// Fold for bitsize over a block list: s(b + acc) from the top block down.
template <Catalan V>
V bitsize_of_blocks(const BlockBuffer<V>& blocks) {
  V acc = V::empty();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    acc = successor(add(block_at<V>(*it), acc));
  }
  return acc;
}

}  // namespace detail

/// x - y. Throws Error(Underflow) when y > x.
template <Catalan V>
V sub(const V& x, const V& y) {
  if (y.is_empty()) return x;
  if (compare(x, y) == Ordering::LT) throw Error(ErrorKind::Underflow, "subtrahend exceeds minuend");
  return detail::sub_unchecked(x, y);
}

/// Total order agreeing with the order of the encoded naturals.
template <Catalan V>
Ordering compare(const V& x, const V& y) {
  if (x.is_empty() && y.is_empty()) return Ordering::EQ;
  if (x.is_empty()) return Ordering::LT;
  if (y.is_empty()) return Ordering::GT;
  if (x == y) return Ordering::EQ;
  // 1 and 2 are fixed points of bitsize, so 1 against 2 or 3 has to be
  // settled here or the bitsize step below would recurse forever. Both are
  // nonzero and distinct by now, so 1 is the smaller one.
  if (is_one(x)) return Ordering::LT;
  if (is_one(y)) return Ordering::GT;
  // Different bitsizes decide the order on their own.
  const auto xb = detail::blocks_of(x);
  const auto yb = detail::blocks_of(y);
  const V xs = detail::bitsize_of_blocks<V>(xb);
  const V ys = detail::bitsize_of_blocks<V>(yb);
  if (!(xs == ys)) return compare(xs, ys);
  return detail::compare_big_first<V>(xb, yb);
}

/// Number of binary digits; empty for empty.
template <Catalan V>
V bitsize(const V& z) {
  // bitsize(c(x, y)) = s(x + bitsize(y)), folded from the last block.
  return detail::bitsize_of_blocks<V>(detail::blocks_of(z));
}

/// floor(log2 n). Throws Error(ZeroPredecessor) on empty.
template <Catalan V>
V ilog2(const V& x) {
  return predecessor(bitsize(x));
}

}  // namespace catnum
