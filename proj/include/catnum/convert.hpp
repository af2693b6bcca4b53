#pragma once

// Conversions between instances. view() in core.hpp is the generic
// structural map; the routines here add the size guard for the big-integer
// target and a block-scanning route that avoids the quadratic cost of
// pairing big integers node by node.

#include <cstdint>
#include <vector>

#include "catnum/arith_block.hpp"
#include "catnum/bintree.hpp"
#include "catnum/core.hpp"
#include "catnum/giant.hpp"
#include "catnum/multitree.hpp"
#include "catnum/natref.hpp"
#include "catnum/parenword.hpp"

namespace catnum {

inline constexpr std::uint64_t kDefaultConversionCap = 1'000'000;

/// True iff bitsize(x) <= cap_bits.
template <Catalan V>
bool fits_bits(const V& x, std::uint64_t cap_bits) {
  return compare(bitsize(x), from_u64<V>(cap_bits)) != Ordering::GT;
}

/// Block-scanning map from the big-integer instance.
template <Catalan V>
V from_nat(const NatRef& n) {
  const mpz_srcptr z = n.value().get_mpz_t();
  std::vector<V> blocks;
  mp_bitcnt_t pos = 0;
  const mp_bitcnt_t top = static_cast<mp_bitcnt_t>(n.bit_length());
  while (pos < top) {
    const bool ones = mpz_tstbit(z, pos) != 0;
    mp_bitcnt_t end = ones ? mpz_scan0(z, pos) : mpz_scan1(z, pos);
    if (end > top) end = top;
    blocks.push_back(from_u64<V>(end - pos - 1));
    pos = end;
  }
  return from_list(blocks);
}

namespace detail {

template <Catalan V>
std::uint64_t small_to_u64(const V& x) {
  // Block lengths of a value under the cap fit in 64 bits.
  std::vector<V> blocks = to_list(x);
  std::uint64_t out = 0;
  std::uint64_t pos = 0;
  bool ones = blocks.size() % 2 == 1;  // lowest block: ones iff odd
  for (const V& b : blocks) {
    const std::uint64_t len = small_to_u64(b) + 1;
    if (ones) {
      const std::uint64_t mask = len >= 64 ? ~0ULL : ((1ULL << len) - 1);
      out |= mask << pos;
    }
    pos += len;
    ones = !ones;
  }
  return out;
}

}  // namespace detail

/// Block-scanning map to the big-integer instance. Throws Error(SizeGuard)
/// when the value has more than cap_bits binary digits.
template <Catalan V>
NatRef to_nat(const V& x, std::uint64_t cap_bits = kDefaultConversionCap) {
  if (!fits_bits(x, cap_bits)) {
    throw Error(ErrorKind::SizeGuard,
                "value exceeds the conversion cap of " + std::to_string(cap_bits) + " bits");
  }
  std::vector<V> blocks = to_list(x);
  mpz_class z;
  mp_bitcnt_t pos = 0;
  bool ones = blocks.size() % 2 == 1;
  for (const V& b : blocks) {
    const mp_bitcnt_t len = static_cast<mp_bitcnt_t>(detail::small_to_u64(b)) + 1;
    if (ones) {
      // Set bits [pos, pos+len).
      mpz_class run = 1;
      mpz_mul_2exp(run.get_mpz_t(), run.get_mpz_t(), len);
      run -= 1;
      mpz_mul_2exp(run.get_mpz_t(), run.get_mpz_t(), pos);
      mpz_ior(z.get_mpz_t(), z.get_mpz_t(), run.get_mpz_t());
    }
    pos += len;
    ones = !ones;
  }
  return NatRef(std::move(z));
}

template <Catalan V>
std::uint64_t to_u64(const V& x) {
  return to_nat(x, 64).to_u64();
}

/// Specialized transformers.
template <Catalan V>
BinTree t(const V& x) {
  if constexpr (std::is_same_v<V, NatRef>) return from_nat<BinTree>(x);
  else return view<BinTree>(x);
}

template <Catalan V>
MultiTree m(const V& x) {
  if constexpr (std::is_same_v<V, NatRef>) return from_nat<MultiTree>(x);
  else return view<MultiTree>(x);
}

template <Catalan V>
ParenWord p(const V& x) {
  return view<ParenWord>(x);
}

template <Catalan V>
NatRef n(const V& x, std::uint64_t cap_bits = kDefaultConversionCap) {
  if constexpr (std::is_same_v<V, NatRef>) return x;
  else return to_nat(x, cap_bits);
}

}  // namespace catnum
