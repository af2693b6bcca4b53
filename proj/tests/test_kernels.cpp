#include "catnum/kernels.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace catnum;
using namespace catnum::kernels;

TEST_CASE("successor cost: parallel matches serial") {
  for (std::uint64_t count : {1ULL, 2ULL, 17ULL, 16384ULL, 16385ULL, 100000ULL}) {
    const SuccessorCost s = successor_cost_serial(count);
    const SuccessorCost p = successor_cost_parallel(count);
    CHECK(s.count == count);
    CHECK(p.count == count);
    CHECK(s.total_calls == p.total_calls);
    CHECK(s.total_calls >= count);
  }
}

TEST_CASE("successor cost counts every call") {
  // Direct count with the instrumented successor.
  CallCounter counter;
  BinTree x;
  for (int i = 0; i < 1000; ++i) x = successor(x, &counter);
  CHECK(successor_cost_serial(1000).total_calls == counter.calls);
}

TEST_CASE("dual census: parallel matches serial") {
  const DualCensus small = dual_census_serial(0, 32);
  CHECK(small.less == 22);
  CHECK(small.equal == 4);   // 0,1,4,24
  CHECK(small.greater == 6);  // dual smaller: 3,7,12,15,16,31
  const DualCensus s = dual_census_serial(0, 5000);
  const DualCensus p = dual_census_parallel(0, 5000);
  CHECK(s.less == p.less);
  CHECK(s.equal == p.equal);
  CHECK(s.greater == p.greater);
  CHECK(s.less + s.equal + s.greater == 5000);
}

TEST_CASE("oracle sweep: parallel matches serial, no mismatches") {
  auto pairs = grid_pairs(32);
  CHECK(pairs.size() == 32 * 32);
  const auto random = random_pairs(500, 200, 42);
  CHECK(random.size() == 500);
  CHECK(random_pairs(500, 200, 42)[17].x == random[17].x);
  pairs.insert(pairs.end(), random.begin(), random.end());
  const OracleReport s = oracle_sweep_serial(pairs);
  const OracleReport p = oracle_sweep_parallel(pairs);
  CHECK(s.total_mismatches() == 0);
  CHECK(p.total_mismatches() == 0);
  for (std::size_t i = 0; i < kAllBinaryOps.size(); ++i) {
    CHECK(s.checked[i] == p.checked[i]);
    CHECK(s.checked[i] > 0);
  }
}
