#pragma once

// Giant numbers: record-holder prime constructors and the Syracuse iterator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "catnum/arith_basic.hpp"
#include "catnum/arith_block.hpp"
#include "catnum/natref.hpp"

namespace catnum {

enum class PrimeKind {
  Mersenne,
  GeneralizedFermat,
  Cullen,
  Woodall,
  Proth,
  SophieGermain,
  TwinLow,
  TwinHigh,
};

inline constexpr PrimeKind kAllPrimeKinds[] = {
    PrimeKind::Mersenne,      PrimeKind::GeneralizedFermat, PrimeKind::Cullen,
    PrimeKind::Woodall,       PrimeKind::Proth,             PrimeKind::SophieGermain,
    PrimeKind::TwinLow,       PrimeKind::TwinHigh,
};

std::string_view to_string(PrimeKind kind) noexcept;
/// Accepts the snake_case names used by the CLI ("mersenne", "twin_low", ...).
std::optional<PrimeKind> prime_kind_from_name(std::string_view name) noexcept;

/// Small structural constant from a machine integer, built by bit blocks.
template <Catalan V>
V from_u64(std::uint64_t n);

/// Largest known prime of each kind (early 2014 records).
template <Catalan V>
V record_prime(PrimeKind kind) {
  auto f = [](std::uint64_t n) { return from_u64<V>(n); };
  switch (kind) {
    case PrimeKind::Mersenne: return predecessor(exp2(f(57885161)));
    case PrimeKind::GeneralizedFermat: return successor(leftshift_by(f(9167433), f(27653)));
    case PrimeKind::Cullen: {
      const V x = f(6679881);
      return successor(leftshift_by(x, x));
    }
    case PrimeKind::Woodall: {
      const V x = f(3752948);
      return predecessor(leftshift_by(x, x));
    }
    case PrimeKind::Proth: return successor(leftshift_by(f(13018586), f(19249)));
    case PrimeKind::SophieGermain:
      return predecessor(leftshift_by(f(666667), f(18543637900515ULL)));
    case PrimeKind::TwinLow: return predecessor(leftshift_by(f(666669), f(3756801695685ULL)));
    case PrimeKind::TwinHigh: return successor(leftshift_by(f(666669), f(3756801695685ULL)));
  }
  return V::empty();
}

/// 2^x * (2y + 1).
template <Catalan V>
V cons(const V& x, const V& y) {
  return leftshift_by(x, successor(twice(y)));
}

/// Inverse of cons. Throws Error(EmptyDeconstruction) on zero.
template <Catalan V>
std::pair<V, V> decons(const V& a) {
  if (a.is_empty()) throw Error(ErrorKind::EmptyDeconstruction, "decons of zero");
  if (is_even(a)) {
    auto [x, xs] = a.unpair();
    return {successor(x), half(predecessor(xs))};
  }
  return {V::empty(), half(predecessor(a))};
}

template <Catalan V>
V hd(const V& a) {
  return decons(a).first;
}

/// (a / 2^v(a) - 1) / 2, v the dyadic valuation.
template <Catalan V>
V tl(const V& a) {
  return decons(a).second;
}

/// tl(3n + 2), computed as tl(n + 2(n+1)).
template <Catalan V>
V syracuse(const V& n) {
  return tl(add(n, twice(successor(n))));
}

template <Catalan V>
struct SyracuseRun {
  std::vector<V> values;
  /// True when the run stopped at max_steps before reaching zero.
  bool truncated = false;
};

/// n, syracuse(n), ... up to and including the first zero, or at most
/// max_steps values when a bound is given.
template <Catalan V>
SyracuseRun<V> nsyr(V x, std::optional<std::size_t> max_steps = std::nullopt) {
  SyracuseRun<V> run;
  while (true) {
    if (max_steps && run.values.size() >= *max_steps) {
      run.truncated = true;
      return run;
    }
    run.values.push_back(x);
    if (x.is_empty()) return run;
    x = syracuse(x);
  }
}

/// Streaming form of nsyr; `sink(value)` sees each iterate as it is made.
/// Returns true when zero was reached, false on hitting max_steps.
template <Catalan V, class Sink>
bool for_each_syracuse(V x, std::optional<std::size_t> max_steps, Sink&& sink) {
  for (std::size_t i = 0;; ++i) {
    if (max_steps && i >= *max_steps) return false;
    sink(static_cast<const V&>(x));
    if (x.is_empty()) return true;
    x = syracuse(x);
  }
}

template <Catalan V>
V from_u64(std::uint64_t n) {
  // Blocks from the least significant end; a block of L equal digits is
  // stored as L - 1.
  std::vector<V> blocks;
  while (n != 0) {
    const bool ones = (n & 1U) != 0;
    std::uint64_t len = 0;
    while (n != 0 && ((n & 1U) != 0) == ones) {
      n >>= 1;
      ++len;
    }
    blocks.push_back(from_u64<V>(len - 1));
  }
  return from_list(blocks);
}

}  // namespace catnum
