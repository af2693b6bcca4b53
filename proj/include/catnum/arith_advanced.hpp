#pragma once

// Multiplication, squaring, power, right shift and division.

#include <utility>

#include "catnum/arith_basic.hpp"
#include "catnum/arith_block.hpp"

namespace catnum {

namespace detail {

/// Recursion on the blocks of `a`: a zero-block becomes a left shift of
/// the rest, a one-block is peeled off as one addition of `y`.
template <Catalan V>
V mul1(const V& a, const V& y) {
  if (a.is_empty()) return V::empty();
  if (is_even(a)) {
    auto [x, xs] = parts(a);
    return shift_block(x, mul1(xs, y));
  }
  return add(y, mul1(predecessor(a), y));
}

}  // namespace detail

template <Catalan V>
V mul(const V& x, const V& y) {
  if (compare(x, y) == Ordering::GT) return detail::mul1(y, x);
  return detail::mul1(x, y);
}

template <Catalan V>
V square(const V& x) {
  return detail::mul1(x, x);
}

/// a^b by squaring. pow(0, 0) = 1.
template <Catalan V>
V pow(const V& a, const V& b) {
  if (b.is_empty()) return one<V>();
  if (a.is_empty()) return V::empty();
  if (is_even(a)) {
    // (2^(x+1) * xs)^b = 2^((x+1)*b) * xs^b; xs is odd so the result is
    // the zero-block of length (x+1)*b in front of xs^b.
    auto [x, xs] = parts(a);
    return V::pair(predecessor(mul(successor(x), b)), pow(xs, b));
  }
  if (is_even(b)) {
    // b = 2^(y+1) * ys: square y+1 times, then raise to ys.
    auto [y, ys] = parts(b);
    V base = square(a);
    for (V k = y; !k.is_empty(); k = predecessor(k)) base = square(base);
    return pow(base, ys);
  }
  return mul(a, pow(a, predecessor(b)));
}

/// floor(y / 2^x), one block at a time.
template <Catalan V>
V rightshift_by(V x, V y) {
  while (true) {
    if (x.is_empty()) return y;
    if (y.is_empty()) return V::empty();
    auto [a, b] = y.unpair();
    const V block = successor(a);
    switch (compare(x, block)) {
      case Ordering::LT: return V::pair(detail::sub_unchecked(a, x), b);
      case Ordering::EQ: return b;
      case Ordering::GT:
        x = detail::sub_unchecked(x, block);
        y = b;
        break;
    }
  }
}

namespace detail {

/// Number of doublings of m that stay <= n.
template <Catalan V>
V try_to_double(const V& n, V m) {
  V k = V::empty();
  while (compare(n, m) != Ordering::LT) {
    m = twice(m);
    k = successor(k);
  }
  return predecessor(k);
}

}  // namespace detail

/// (quotient, remainder). Throws Error(DivisionByZero) when y is empty.
template <Catalan V>
std::pair<V, V> div_rem(const V& x, const V& y) {
  if (y.is_empty()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  // Each step subtracts the largest 2^k * y that fits and adds 2^k to the
  // quotient.
  V q = V::empty();
  V r = x;
  while (compare(r, y) != Ordering::LT) {
    const V k = detail::try_to_double(r, y);
    r = detail::sub_unchecked(r, leftshift_by(k, y));
    q = add(exp2(k), q);
  }
  return {std::move(q), std::move(r)};
}

template <Catalan V>
V divide(const V& x, const V& y) {
  return div_rem(x, y).first;
}

template <Catalan V>
V remainder(const V& x, const V& y) {
  return div_rem(x, y).second;
}

}  // namespace catnum
