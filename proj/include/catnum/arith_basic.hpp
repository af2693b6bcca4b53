#pragma once

// Parity, one, successor/predecessor, doubling/halving and exponent of two.
// All of these touch O(1) nodes on average and log* nodes in the worst case
// when the instance has constant-time pair/unpair.

#include <cstdint>

#include "catnum/core.hpp"

namespace catnum {

enum class Parity { Even, Odd };

/// Counts every invocation of successor and predecessor made while
/// computing one top-level call. Owned by the caller.
struct CallCounter {
  std::uint64_t calls = 0;
};

template <Catalan V>
bool is_odd(const V& x) {
  if constexpr (CachesParity<V>) {
    return x.is_odd();
  } else {
    // Parity alternates with each block; the highest block is made of ones.
    bool odd = false;
    V cur = x;
    while (!cur.is_empty()) {
      odd = !odd;
      cur = cur.unpair().second;
    }
    return odd;
  }
}

template <Catalan V>
bool is_even(const V& x) {
  return !is_odd(x);
}

template <Catalan V>
Parity parity(const V& x) {
  return is_odd(x) ? Parity::Odd : Parity::Even;
}

template <Catalan V>
V one() {
  if constexpr (requires { V::unit(); }) {
    return V::unit();
  } else {
    return V::pair(V::empty(), V::empty());
  }
}

template <Catalan V>
bool is_one(const V& z) {
  if (z.is_empty()) return false;
  auto [x, y] = parts(z);
  return x.is_empty() && y.is_empty();
}

template <Catalan V>
V predecessor(const V& a, CallCounter* counter = nullptr);

/// n + 1, one block at a time. The case numbers match those of
/// predecessor, which undoes each case.
template <Catalan V>
V successor(const V& a, CallCounter* counter = nullptr) {
  if (counter) ++counter->calls;
  if (a.is_empty()) return one<V>();  // 1
  auto [x, y] = parts(a);
  if (y.is_empty()) return V::pair(x, one<V>());  // 2
  const V e = V::empty();
  if (is_even(a)) {
    // a = c(v, w), w = c(x', y')
    const V& v = x;
    const V& w = y;
    if (v.is_empty()) {  // 3
      auto [x2, y2] = parts(w);
      return V::pair(successor(x2, counter), y2);
    }
    return V::pair(e, V::pair(predecessor(v, counter), w));  // 4
  }
  // a = c(x, w), w = c(m, n)
  const V& w = y;
  auto [m, n] = parts(w);
  if (!n.is_empty() && m.is_empty()) {  // 5
    auto [y2, z] = parts(n);
    return V::pair(x, V::pair(successor(y2, counter), z));
  }
  // 6
  return V::pair(x, V::pair(e, V::pair(predecessor(m, counter), n)));
}

/// n - 1. Throws Error(ZeroPredecessor) on empty.
template <Catalan V>
V predecessor(const V& a, CallCounter* counter) {
  if (counter) ++counter->calls;
  if (a.is_empty()) throw Error(ErrorKind::ZeroPredecessor, "predecessor of zero");
  auto [x, v] = parts(a);
  if (x.is_empty() && v.is_empty()) return V::empty();  // 1
  if (is_one(v)) return V::pair(x, V::empty());       // 2
  const V e = V::empty();
  if (is_even(a)) {
    // a = c(x, v), v = c(r, w)
    auto [r, w] = parts(v);
    if (!w.is_empty() && r.is_empty()) {  // 6
      auto [y, z] = parts(w);
      return V::pair(x, V::pair(successor(y, counter), z));
    }
    // 5: here v = c(y, z)
    return V::pair(x, V::pair(e, V::pair(predecessor(r, counter), w)));
  }
  // a = c(r, v)
  const V& r = x;
  if (!v.is_empty() && r.is_empty()) {  // 4
    auto [x2, z] = parts(v);
    return V::pair(successor(x2, counter), z);
  }
  // 3: a = c(x, y)
  return V::pair(e, V::pair(predecessor(r, counter), v));
}

/// 2n.
template <Catalan V>
V twice(const V& x) {
  if (x.is_empty()) return x;
  if (is_odd(x)) return V::pair(V::empty(), x);
  auto [a, b] = parts(x);
  return V::pair(successor(a), b);
}

/// n / 2 for even n. Throws Error(OddHalf) on odd input.
template <Catalan V>
V half(const V& z) {
  if (z.is_empty()) return z;
  if (is_odd(z)) throw Error(ErrorKind::OddHalf, "half of an odd number");
  auto [x, y] = parts(z);
  if (x.is_empty()) return y;
  return V::pair(predecessor(x), y);
}

/// 2^n.
template <Catalan V>
V exp2(const V& x) {
  if (x.is_empty()) return one<V>();
  return V::pair(predecessor(x), one<V>());
}

/// Exponent of an exact power of two. Throws Error(NotPowerOfTwo) otherwise.
template <Catalan V>
V log2(const V& x) {
  if (is_one(x)) return V::empty();
  if (!x.is_empty()) {
    auto [y, z] = parts(x);
    if (is_one(z)) return successor(y);
  }
  throw Error(ErrorKind::NotPowerOfTwo, "log2 of a value that is not a power of two");
}

}  // namespace catnum
