#include <gmpxx.h>

#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace catnum;
using testing::T;
using testing::U;
using testing::Z;

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

Ordering oracle_cmp(const mpz_class& a, const mpz_class& b) {
  const int c = cmp(a, b);
  return c < 0 ? Ordering::LT : (c == 0 ? Ordering::EQ : Ordering::GT);
}

}  // namespace

TEST_CASE("parity and one") {
  CHECK(parity(BinTree()) == Parity::Even);
  for (std::uint64_t k = 0; k <= 10000; ++k) {
    REQUIRE(parity(T(k)) == (k % 2 ? Parity::Odd : Parity::Even));
  }
  // The generic route for instances without a cached parity.
  for (std::uint64_t k = 0; k <= 200; ++k) CHECK(is_odd(p(T(k))) == (k % 2 == 1));
  CHECK(U(one<BinTree>()) == 1);
  CHECK(is_one(one<BinTree>()));
  CHECK(is_one(successor(BinTree())));
  CHECK_FALSE(is_one(T(2)));
}

TEST_CASE("successor and predecessor") {
  BinTree x;
  for (std::uint64_t k = 0; k <= 15; ++k) {
    CHECK(U(successor(T(k))) == k + 1);
    CHECK(U(predecessor(T(k + 1))) == k);
  }
  CHECK(successor(BinTree()).to_string() == "C E E");
  CHECK(successor(successor(BinTree())).to_string() == "C E (C E E)");
  CHECK(T(3).to_string() == "C (C E E) E");
  CHECK(T(4).to_string() == "C (C E E) (C E E)");
  CHECK(predecessor(one<BinTree>()).is_empty());
  CHECK_THROWS_AS(predecessor(BinTree()), Error);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t k = rng() >> 1;
    const BinTree v = T(k);
    REQUIRE(U(successor(v)) == k + 1);
    REQUIRE(predecessor(successor(v)) == v);
  }
  CHECK(Z(successor(T(~0ULL))) == pow2(64));
}

TEST_CASE("successor agrees across instances") {
  NatRef n0;
  MultiTree m0;
  ParenWord p0;
  for (std::uint64_t k = 0; k < 300; ++k) {
    CHECK(n0 == NatRef(k));
    CHECK(view<NatRef>(m0) == NatRef(k));
    CHECK(view<NatRef>(p0) == NatRef(k));
    n0 = successor(n0);
    m0 = successor(m0);
    p0 = successor(p0);
  }
}

TEST_CASE("double and half") {
  CHECK(twice(BinTree()).is_empty());
  CHECK(U(twice(T(7))) == 14);
  for (std::uint64_t k = 0; k <= 10000; ++k) REQUIRE(half(twice(T(k))) == T(k));
  CHECK_THROWS_AS(half(T(7)), Error);
  CHECK(half(BinTree()).is_empty());
}

TEST_CASE("exp2 and log2") {
  for (std::uint64_t k = 0; k <= 15; ++k) {
    CHECK(U(exp2(T(k))) == (1ULL << k));
    CHECK(U(log2(T(1ULL << k))) == k);
  }
  BinTree tower;
  for (int i = 0; i < 7; ++i) tower = exp2(tower);
  CHECK(tower.to_string() == "C (C (C (C (C (C E E) E) E) E) E) (C E E)");
  CHECK(p(tower).str() == "((((((())))))())");
  CHECK(m(tower).to_string() == "F [F [F [F [F [F [F []]]]]],F []]");
  BinTree back = tower;
  for (int i = 0; i < 7; ++i) back = log2(back);
  CHECK(back.is_empty());
  CHECK_THROWS_AS(log2(T(6)), Error);
  CHECK_THROWS_AS(log2(BinTree()), Error);
}

TEST_CASE("left shifts") {
  CHECK(leftshift_by(T(5), BinTree()).is_empty());
  CHECK(leftshift_by(BinTree(), T(9)) == T(9));
  CHECK(U(leftshift_by(T(3), T(5))) == 40);
  CHECK(leftshift_by1(BinTree(), T(9)) == T(9));
  CHECK(U(leftshift_by1(T(2), T(3))) == 15);
  CHECK(leftshift_by2(BinTree(), T(9)) == T(9));
  CHECK(U(leftshift_by2(T(1), T(0))) == 2);
  for (std::uint64_t x = 0; x <= 10; ++x) {
    for (std::uint64_t k = 0; k <= 50; ++k) {
      std::uint64_t f = k;
      std::uint64_t g = k;
      for (std::uint64_t i = 0; i < x; ++i) {
        f = 2 * f + 1;
        g = 2 * g + 2;
      }
      CHECK(U(leftshift_by1(T(x), T(k))) == f);
      CHECK(U(leftshift_by2(T(x), T(k))) == g);
      CHECK(U(leftshift_by(T(x), T(k))) == (k << x));
    }
  }
}

TEST_CASE("block left shifts match the successor forms") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(77);
  for (std::uint64_t x = 0; x <= 40; ++x) {
    for (std::uint64_t k = 0; k <= 300; ++k) {
      CHECK(leftshift_by1(T(x), T(k)) == detail::leftshift_by1_reference(T(x), T(k)));
      CHECK(leftshift_by2(T(x), T(k)) == detail::leftshift_by2_reference(T(x), T(k)));
    }
  }
  for (int i = 0; i < 500; ++i) {
    const BinTree x = T(testing::random_bits(rng, 12));
    const BinTree k = T(testing::random_bits(rng, 300));
    CHECK(leftshift_by1(x, k) == detail::leftshift_by1_reference(x, k));
    CHECK(leftshift_by2(x, k) == detail::leftshift_by2_reference(x, k));
  }
  // Tower exponents stay symbolic either way.
  const BinTree tower = exp2(exp2(T(100)));
  CHECK(leftshift_by1(tower, T(5)) == detail::leftshift_by1_reference(tower, T(5)));
  CHECK(leftshift_by2(tower, T(6)) == detail::leftshift_by2_reference(tower, T(6)));
}

TEST_CASE("add and sub small tables") {
  for (std::uint64_t k = 0; k <= 15; ++k) {
    CHECK(U(add(T(10), T(k))) == 10 + k);
    CHECK(U(sub(T(15), T(k))) == 15 - k);
  }
  CHECK(add(T(77), BinTree()) == T(77));
  CHECK(sub(T(77), BinTree()) == T(77));
  CHECK_THROWS_AS(sub(T(3), T(5)), Error);
}

TEST_CASE("add, sub and compare against the oracle") {
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = 0; b < 256; ++b) {
      REQUIRE(U(add(T(a), T(b))) == a + b);
      if (a >= b) REQUIRE(U(sub(T(a), T(b))) == a - b);
    }
  }
  for (std::uint64_t a = 0; a < 512; ++a) {
    for (std::uint64_t b = 0; b < 512; ++b) {
      const Ordering want = a < b ? Ordering::LT : (a == b ? Ordering::EQ : Ordering::GT);
      REQUIRE(compare(T(a), T(b)) == want);
    }
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(3);
  for (int i = 0; i < 2000; ++i) {
    mpz_class a = testing::random_bits(rng, 256);
    mpz_class b = testing::random_bits(rng, 256);
    CHECK(Z(add(T(a), T(b))) == a + b);
    if (a < b) std::swap(a, b);
    CHECK(Z(sub(T(a), T(b))) == a - b);
    CHECK(compare(T(a), T(b)) == oracle_cmp(a, b));
  }
  // Without the unit cases compare(1, 2) would reduce to itself.
  CHECK(bitsize(T(1)) == T(1));
  CHECK(bitsize(T(2)) == T(2));
  CHECK(compare(T(1), T(2)) == Ordering::LT);
  CHECK(compare(T(3), T(1)) == Ordering::GT);
  CHECK(compare(T(5), T(10)) == Ordering::LT);
  CHECK(compare(T(10), T(10)) == Ordering::EQ);
  CHECK(compare(T(10), T(5)) == Ordering::GT);
}

TEST_CASE("add and sub in other instances") {
  for (std::uint64_t a = 0; a < 40; ++a) {
    for (std::uint64_t b = 0; b < 40; ++b) {
      CHECK(add(NatRef(a), NatRef(b)) == NatRef(a + b));
      CHECK(view<NatRef>(add(m(T(a)), m(T(b)))) == NatRef(a + b));
      if (a >= b) CHECK(view<NatRef>(sub(p(T(a)), p(T(b)))) == NatRef(a - b));
    }
  }
}

TEST_CASE("bitsize and ilog2") {
  CHECK(bitsize(BinTree()).is_empty());
  const std::vector<unsigned long> exps = {16, 32, 64, 256};
  const std::vector<std::uint64_t> bits = {17, 33, 65, 257};
  for (std::size_t i = 0; i < exps.size(); ++i) CHECK(U(bitsize(T(pow2(exps[i])))) == bits[i]);
  CHECK(ilog2(one<BinTree>()).is_empty());
  CHECK(U(ilog2(T(65536))) == 16);
  for (std::uint64_t k = 1; k <= 10000; ++k) {
    REQUIRE(U(bitsize(T(k))) == mpz_sizeinbase(mpz_class(static_cast<unsigned long>(k)).get_mpz_t(), 2));
    REQUIRE(U(ilog2(T(k))) == 63 - static_cast<std::uint64_t>(__builtin_clzll(k)));
  }
  CHECK_THROWS_AS(ilog2(BinTree()), Error);
}

TEST_CASE("mul, square and pow") {
  CHECK(mul(T(9), BinTree()).is_empty());
  CHECK(mul(BinTree(), T(9)).is_empty());
  CHECK(U(square(T(12))) == 144);
  CHECK(square(BinTree()).is_empty());
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = 0; b < 256; ++b) REQUIRE(U(mul(T(a), T(b))) == a * b);
  }
  for (std::uint64_t a = 0; a <= 1000; ++a) REQUIRE(square(T(a)) == mul(T(a), T(a)));
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(5);
  for (int i = 0; i < 1000; ++i) {
    const mpz_class a = testing::random_bits(rng, 128);
    const mpz_class b = testing::random_bits(rng, 128);
    REQUIRE(Z(mul(T(a), T(b))) == a * b);
  }
  CHECK(U(pow(T(7), BinTree())) == 1);
  CHECK(U(pow(BinTree(), BinTree())) == 1);
  CHECK(pow(BinTree(), T(3)).is_empty());
  for (unsigned long a = 0; a < 20; ++a) {
    for (unsigned long b = 0; b < 20; ++b) {
      mpz_class want;
      mpz_ui_pow_ui(want.get_mpz_t(), a, b);
      REQUIRE(Z(pow(T(a), T(b))) == want);
    }
  }
  CHECK(U(bitsize(pow(T(10), T(100)))) == 333);
  CHECK(cat_show(pow(T(32), T(10000000))) == "(((()(()))((())())((()))()()()((())())()())())");
  CHECK(cat_show(pow(m(T(32)), m(T(10000000)))) ==
        "(((()(()))((())())((()))()()()((())())()())())");
}

TEST_CASE("giant term arithmetic") {
  const BinTree term1 = sub(exp2(exp2(T(12345))), exp2(T(6789)));
  const BinTree term2 = add(exp2(exp2(T(123))), exp2(T(456789)));
  const BinTree nested = bitsize(bitsize(mul(term1, term2)));
  CHECK(U(nested) == 12346);
  CHECK(nested.to_string() ==
        "C E (C E (C E (C (C E (C E E)) (C (C E (C E (C E E))) (C (C E E) E)))))");
}

TEST_CASE("right shift and division") {
  CHECK(rightshift_by(BinTree(), T(9)) == T(9));
  CHECK(rightshift_by(T(4), BinTree()).is_empty());
  CHECK(U(rightshift_by(T(3), T(40))) == 5);
  for (std::uint64_t k = 0; k <= 10; ++k) {
    for (std::uint64_t v = 0; v <= 1000; ++v) REQUIRE(U(rightshift_by(T(k), T(v))) == (v >> k));
  }
  auto [q, r] = div_rem(T(26), T(3));
  CHECK(U(q) == 8);
  CHECK(U(r) == 2);
  CHECK(U(divide(T(26), T(3))) == 8);
  CHECK(U(remainder(T(26), T(3))) == 2);
  CHECK(divide(BinTree(), T(5)).is_empty());
  CHECK(div_rem(T(99), one<BinTree>()) == std::pair<BinTree, BinTree>(T(99), BinTree()));
  CHECK_THROWS_AS(div_rem(T(9), BinTree()), Error);
  for (std::uint64_t x = 0; x <= 500; ++x) {
    for (std::uint64_t y = 1; y <= 50; ++y) {
      auto [qq, rr] = div_rem(T(x), T(y));
      REQUIRE(U(qq) == x / y);
      REQUIRE(U(rr) == x % y);
    }
  }
}
