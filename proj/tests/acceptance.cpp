// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catnum/catnum.hpp"
#include "catnum/kernels.hpp"

using namespace catnum;
using Clock = std::chrono::steady_clock;

namespace {

BinTree T(std::uint64_t n) { return from_u64<BinTree>(n); }
std::uint64_t U(const BinTree& x) { return to_u64(x); }

// Collects failed checks for one criterion.
struct Checks {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

bool run(const Criterion& c) {
  Checks checks;
  const auto start = Clock::now();
  try {
    c.body(checks);
  } catch (const std::exception& e) {
    checks.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= c.limit_seconds) {
    std::ostringstream ss;
    ss << "took " << secs << " s, limit " << c.limit_seconds << " s";
    checks.failures.push_back(ss.str());
  }
  const bool ok = checks.failures.empty();
  std::printf("%s [%d] %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
              c.name.c_str(), secs, c.limit_seconds, checks.note.empty() ? "" : ": ",
              checks.note.c_str());
  for (const std::string& f : checks.failures) std::printf("       - %s\n", f.c_str());
  std::fflush(stdout);
  return ok;
}

std::vector<std::uint64_t> u64s(const std::vector<BinTree>& xs) {
  std::vector<std::uint64_t> out;
  for (const BinTree& x : xs) out.push_back(U(x));
  return out;
}

void oracle_equivalence(Checks& c) {
  auto pairs = kernels::grid_pairs(256);
  const auto random = kernels::random_pairs(10000, 256, 20140101);
  pairs.insert(pairs.end(), random.begin(), random.end());
  const kernels::OracleReport report = kernels::oracle_sweep_parallel(pairs);
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < kernels::kAllBinaryOps.size(); ++i) {
    checked += report.checked[i];
    c.expect(report.mismatches[i] == 0,
             std::string(kernels::to_string(kernels::kAllBinaryOps[i])) + " mismatches " +
                 std::to_string(report.mismatches[i]));
  }
  c.note = std::to_string(pairs.size()) + " pairs, " + std::to_string(checked) +
           " operations, " + std::to_string(report.total_mismatches()) + " mismatches";
}

void golden_values(Checks& c) {
  const std::vector<std::pair<int, int>> unpaired = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2},
                                                     {0, 3}, {2, 0}, {2, 1}, {0, 4}, {0, 5}};
  for (int k = 1; k <= 10; ++k) {
    auto [i, j] = NatRef(k).unpair();
    c.expect(i == NatRef(unpaired[k - 1].first) && j == NatRef(unpaired[k - 1].second),
             "unpair " + std::to_string(k));
  }
  c.expect(NatRef::pair(100, 200).to_string() == "509595541291748219401674688561151",
           "pair(100,200)");
  c.expect(u64s(to_list(T(2014))) == std::vector<std::uint64_t>{0, 3, 0, 4}, "to_list 2014");
  c.expect(cat_show(T(12345)) == "(()(())(()())(()()())(()))", "cat_show 12345");
  for (std::uint64_t k = 0; k <= 15; ++k) {
    c.expect(U(exp2(T(k))) == (1ULL << k), "exp2 " + std::to_string(k));
    c.expect(U(log2(T(1ULL << k))) == k, "log2 " + std::to_string(k));
    c.expect(U(add(T(10), T(k))) == 10 + k, "add 10 " + std::to_string(k));
    c.expect(U(sub(T(15), T(k))) == 15 - k, "sub 15 " + std::to_string(k));
  }
  c.expect(U(divide(T(26), T(3))) == 8 && U(remainder(T(26), T(3))) == 2, "26 / 3");
  c.expect(U(bitsize(pow(T(10), T(100)))) == 333, "bitsize 10^100");
  c.expect(cat_show(pow(T(32), T(10000000))) == "(((()(()))((())())((()))()()()((())())()())())",
           "cat_show 32^10^7");

  std::vector<std::uint64_t> sizes;
  for (std::uint64_t k : {0, 100, 1000, 10000}) sizes.push_back(U(catsize(T(k))));
  c.expect(sizes == std::vector<std::uint64_t>{0, 7, 9, 13}, "catsize small");
  sizes.clear();
  std::vector<std::uint64_t> bits;
  for (std::uint64_t e : {16, 32, 64, 256}) {
    const BinTree x = exp2(T(e));
    sizes.push_back(U(catsize(x)));
    bits.push_back(U(bitsize(x)));
  }
  c.expect(sizes == std::vector<std::uint64_t>{5, 6, 6, 6}, "catsize powers");
  c.expect(bits == std::vector<std::uint64_t>{17, 33, 65, 257}, "bitsize powers");

  const std::vector<std::uint64_t> catalan = {1,    1,    2,     5,     14,     42,     132,    429,
                                              1430, 4862, 16796, 58786, 208012, 742900, 2674440};
  for (unsigned k = 0; k < catalan.size(); ++k) {
    c.expect(catalan_number(k).to_u64() == catalan[k], "catalan " + std::to_string(k));
  }
  c.expect(u64s(enumerate_catsized<BinTree>(4)) ==
               std::vector<std::uint64_t>{8, 9, 10, 11, 12, 13, 14, 16, 30, 31, 63, 127, 255, 65535},
           "catsized 4");
  const BinTree best = best_case(T(5));
  const BinTree worst = worst_case(T(5));
  c.expect(U(bitsize(best)) == 65536 && U(catsize(best)) == 5, "best case 5");
  c.expect(U(bitsize(worst)) == 5 && U(catsize(worst)) == 5, "worst case 5");

  const std::vector<std::uint64_t> duals = {0,  1,   3,   2, 4,  15,   7,          6,  12, 31, 65535,
                                            16, 8, 255, 127, 5, 11, 8191, 4294967295, 32, 65536};
  for (std::uint64_t k = 0; k <= 20; ++k) c.expect(U(dual(T(k))) == duals[k], "dual " + std::to_string(k));
  std::vector<std::uint64_t> lt, eq, gt;
  for (std::uint64_t k = 0; k < 32; ++k) {
    switch (compare(T(k), dual(T(k)))) {
      case Ordering::LT: lt.push_back(k); break;
      case Ordering::EQ: eq.push_back(k); break;
      case Ordering::GT: gt.push_back(k); break;
    }
  }
  c.expect(lt == std::vector<std::uint64_t>{2,  5,  6,  8,  9,  10, 11, 13, 14, 17, 18,
                                            19, 20, 21, 22, 23, 25, 26, 27, 28, 29, 30},
           "dual LT set");
  c.expect(eq == std::vector<std::uint64_t>{0, 1, 4, 24}, "dual EQ set");
  c.expect(gt == std::vector<std::uint64_t>{3, 7, 12, 15, 16, 31}, "dual GT set");
}

void giant_numbers(Checks& c) {
  struct Row {
    PrimeKind kind;
    std::uint64_t bits;
    std::uint64_t size;
  };
  const Row rows[] = {
      {PrimeKind::Mersenne, 57885161, 25},  {PrimeKind::GeneralizedFermat, 9167448, 37},
      {PrimeKind::Cullen, 6679904, 46},     {PrimeKind::Woodall, 3752970, 37},
      {PrimeKind::SophieGermain, 666712, 62}, {PrimeKind::TwinLow, 666711, 59},
      {PrimeKind::TwinHigh, 666711, 60},
  };
  for (const Row& r : rows) {
    const BinTree x = record_prime<BinTree>(r.kind);
    const std::uint64_t bits = U(bitsize(x));
    const std::uint64_t size = U(catsize(x));
    c.expect(bits == r.bits && size == r.size,
             std::string(to_string(r.kind)) + " gave (" + std::to_string(bits) + ", " +
                 std::to_string(size) + ")");
  }
  c.expect(cat_show(record_prime<BinTree>(PrimeKind::Mersenne)) ==
               "(((()())()()((()))((())())()()(())(())(()())()(())))",
           "mersenne cat_show");
  const BinTree term1 = sub(exp2(exp2(T(12345))), exp2(T(6789)));
  const BinTree term2 = add(exp2(exp2(T(123))), exp2(T(456789)));
  const std::uint64_t nested = U(bitsize(bitsize(mul(term1, term2))));
  c.expect(nested == 12346, "term product bitsize " + std::to_string(nested));
  c.note = "7 record primes, term product " + std::to_string(nested);
}

void collatz(Checks& c) {
  const std::vector<std::uint64_t> want = {
      2014, 755,  1133, 1700, 1275, 1913, 2870, 1076, 807,  1211, 1817,
      2726, 1022, 383,  575,  863,  1295, 1943, 2915, 4373, 6560, 4920,
      3690, 86,   32,   24,   18,   3,    5,    8,    6,    2,    0};
  c.expect(u64s(nsyr(T(2014)).values) == want, "nsyr 2014");

  std::vector<std::uint64_t> sizes;
  for_each_syracuse(best_case(T(100)), std::size_t{100},
                    [&](const BinTree& v) { sizes.push_back(U(catsize(v))); });
  c.expect(sizes.size() == 100, "tower run length");
  c.expect(std::vector<std::uint64_t>(sizes.begin(), sizes.begin() + 5) ==
               std::vector<std::uint64_t>{100, 199, 297, 298, 300},
           "tower head");
  c.expect(std::vector<std::uint64_t>(sizes.end() - 3, sizes.end()) ==
               std::vector<std::uint64_t>{434, 445, 439},
           "tower tail");

  // The twin tower (slow in the original setting; seconds here).
  std::vector<std::uint64_t> twin;
  for_each_syracuse(add(best_case(T(101)), best_case(T(103))), std::size_t{2},
                    [&](const BinTree& v) { twin.push_back(U(catsize(v))); });
  c.expect(twin == std::vector<std::uint64_t>{10206, 10500}, "twin tower");
  c.note = "tower tail " + std::to_string(sizes[97]) + "," + std::to_string(sizes[98]) + "," +
           std::to_string(sizes[99]) + "; twin tower " +
           (twin.size() == 2 ? std::to_string(twin[0]) + "," + std::to_string(twin[1]) : "?");
}

void duality(Checks& c) {
  for (std::uint64_t k = 0; k <= 10000; ++k) {
    const BinTree x = T(k);
    if (!(dual(dual(x)) == x)) c.expect(false, "involution at " + std::to_string(k));
  }
  c.expect(dual(best_case(T(10000))) == worst_case(T(10000)), "dual of tower");
  const kernels::DualCensus census = kernels::dual_census_parallel(0, 1ULL << 16);
  c.expect(census.greater == 68, "smaller-dual count " + std::to_string(census.greater));
  c.expect(census.equal == 11, "equal-dual count " + std::to_string(census.equal));
  c.note = std::to_string(census.greater) + " smaller, " + std::to_string(census.equal) +
           " equal on 0..2^16-1";
}

void successor_cost(Checks& c) {
  const kernels::SuccessorCost cost = kernels::successor_cost_parallel(1ULL << 20);
  const double mean = cost.average();
  c.expect(mean >= 2.0 && mean <= 2.4, "mean " + std::to_string(mean));
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu calls over 2^20, mean %.4f",
                static_cast<unsigned long long>(cost.total_calls), mean);
  c.note = buf;
}

void property_suites(Checks& c) {
  constexpr int kCases = 10000;
  std::mt19937_64 rng(2014);
  gmp_randclass big(gmp_randinit_mt);
  big.seed(2014);
  auto random_tree = [&] { return t(NatRef(mpz_class(big.get_z_bits(1 + rng() % 200)))); };
  int failures = 0;
  auto expect = [&](bool ok, const char* what) {
    if (!ok && failures++ < 10) c.expect(false, what);
  };

  for (int i = 0; i < kCases; ++i) {
    const BinTree x = random_tree();
    const BinTree y = random_tree();
    const BinTree z = BinTree::pair(x, y);
    expect(z.unpair() == std::pair(x, y), "unpair(pair)");
    if (!x.is_empty()) {
      auto [a, b] = x.unpair();
      expect(BinTree::pair(a, b) == x, "pair(unpair)");
      expect(successor(predecessor(x)) == x, "s(p(x))");
    }
    expect(predecessor(successor(x)) == x, "p(s(x))");
    expect(decons(cons(x, y)) == std::pair(x, y), "decons(cons)");
    const BinTree small = T(rng() % 100000);
    expect(log2(exp2(small)) == small, "log2(exp2)");
    expect(half(twice(x)) == x, "half(double)");
    expect(rightshift_by(small, leftshift_by(small, y)) == y, "rightshift(leftshift)");
    expect(compare(catsize(x), bitsize(x)) != Ordering::GT, "catsize <= bitsize");
    const BinTree td = max_tdepth(x);
    expect(compare(catsize(x), td) != Ordering::LT && compare(td, max_mdepth(x)) != Ordering::LT,
           "depth chain");
    const NatRef nx = n(x);
    expect(t(m(x)) == x && t(p(x)) == x && t(nx) == x, "round trip through M, P, N");
    expect(view<BinTree>(nx) == x && view<NatRef>(x) == nx, "structural route");
  }
  c.note = std::to_string(kCases) + " cases per property, " + std::to_string(failures) + " failures";
}

void tractability(Checks& c) {
  const BinTree tower = exp2(exp2(t(NatRef(10000))));
  const BinTree other = add(tower, exp2(T(777)));
  std::ostringstream timings;
  auto timed = [&](const char* name, auto&& f) {
    const auto start = Clock::now();
    const BinTree r = f();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    timings << name << " " << secs << "s ";
    c.expect(secs < 1.0, std::string(name) + " took " + std::to_string(secs) + " s");
    return r;
  };
  const BinTree sum = timed("add", [&] { return add(tower, other); });
  const BinTree diff = timed("sub", [&] { return sub(other, tower); });
  const BinTree prod = timed("mul", [&] { return mul(tower, other); });
  const BinTree bits = timed("bitsize", [&] { return bitsize(prod); });
  const BinTree size = timed("catsize", [&] { return catsize(prod); });
  c.expect(diff == exp2(T(777)), "difference is 2^777");
  c.expect(sub(sum, other) == tower, "add/sub consistency");
  // tower * (tower + 2^777) = 2^(2^(10001)) + 2^(2^10000 + 777): bitsize 2^10001 + 1.
  c.expect(bits == successor(exp2(T(10001))), "bitsize of product");
  c.expect(compare(size, T(100)) == Ordering::LT, "catsize of product is small");
  c.note = timings.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence of add/sub/mul/compare/divide/remainder", 60, oracle_equivalence},
      {2, "golden values", 30, golden_values},
      {3, "record primes and giant term product", 10, giant_numbers},
      {4, "Collatz runs (includes slow twin-tower check)", 300, collatz},
      {5, "structural duality", 120, duality},
      {6, "average successor cost", 120, successor_cost},
      {7, "property suites", 600, property_suites},
      {8, "tractability on exp2(exp2(10000))", 10, tractability},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!run(c)) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
