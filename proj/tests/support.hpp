#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catnum/catnum.hpp"

namespace testing {

using catnum::BinTree;
using catnum::NatRef;

inline BinTree T(std::uint64_t n) { return catnum::from_u64<BinTree>(n); }
inline BinTree T(const mpz_class& z) { return catnum::t(NatRef(z)); }
inline std::uint64_t U(const BinTree& x) { return catnum::to_u64(x); }
inline mpz_class Z(const BinTree& x) { return catnum::to_nat(x).value(); }

template <class V>
std::vector<std::uint64_t> as_u64(const std::vector<V>& xs) {
  std::vector<std::uint64_t> out;
  for (const V& x : xs) out.push_back(catnum::to_u64(catnum::t(x)));
  return out;
}

// Uniform random value below 2^bits.
inline mpz_class random_bits(gmp_randclass& rng, unsigned bits) { return rng.get_z_bits(bits); }

}  // namespace testing
