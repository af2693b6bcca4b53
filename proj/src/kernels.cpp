#include "catnum/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

#include "catnum/arith_advanced.hpp"
#include "catnum/bintree.hpp"
#include "catnum/complexity.hpp"
#include "catnum/convert.hpp"

namespace catnum::kernels {

namespace {

constexpr std::uint64_t kSuccessorChunk = 1 << 14;

std::uint64_t successor_calls(std::uint64_t lo, std::uint64_t hi) {
  CallCounter counter;
  BinTree x = from_u64<BinTree>(lo);
  for (std::uint64_t i = lo; i < hi; ++i) x = successor(x, &counter);
  return counter.calls;
}

void tally(DualCensus& census, std::uint64_t value) {
  const BinTree x = from_u64<BinTree>(value);
  switch (compare(x, dual(x))) {
    case Ordering::LT: ++census.less; break;
    case Ordering::EQ: ++census.equal; break;
    case Ordering::GT: ++census.greater; break;
  }
}

Ordering oracle_order(const NatRef& a, const NatRef& b) {
  const int c = cmp(a.value(), b.value());
  return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
}

// Adds the outcome of every operation on one pair into `report`.
void check_pair(const OperandPair& pair, OracleReport& report) {
  const NatRef& xn = pair.x;
  const NatRef& yn = pair.y;
  const BinTree x = from_nat<BinTree>(xn);
  const BinTree y = from_nat<BinTree>(yn);
  auto record = [&](BinaryOp op, bool ok) {
    const auto i = static_cast<std::size_t>(op);
    ++report.checked[i];
    if (!ok) ++report.mismatches[i];
  };
  const auto cap = static_cast<std::uint64_t>(std::max(xn.bit_length(), yn.bit_length())) * 2 + 2;
  record(BinaryOp::Add, to_nat(add(x, y), cap).value() == xn.value() + yn.value());
  const bool x_ge = cmp(xn.value(), yn.value()) >= 0;
  const BinTree& hi = x_ge ? x : y;
  const BinTree& lo = x_ge ? y : x;
  const mpz_class diff = x_ge ? mpz_class(xn.value() - yn.value()) : mpz_class(yn.value() - xn.value());
  record(BinaryOp::Sub, to_nat(sub(hi, lo), cap).value() == diff);
  record(BinaryOp::Mul, to_nat(mul(x, y), cap).value() == xn.value() * yn.value());
  record(BinaryOp::Compare, compare(x, y) == oracle_order(xn, yn));
  if (!yn.is_empty()) {
    auto [q, r] = div_rem(x, y);
    mpz_class qo, ro;
    mpz_fdiv_qr(qo.get_mpz_t(), ro.get_mpz_t(), xn.value().get_mpz_t(), yn.value().get_mpz_t());
    record(BinaryOp::Divide, to_nat(q, cap).value() == qo);
    record(BinaryOp::Remainder, to_nat(r, cap).value() == ro);
  }
}

void merge(OracleReport& into, const OracleReport& from) {
  for (std::size_t i = 0; i < into.mismatches.size(); ++i) {
    into.mismatches[i] += from.mismatches[i];
    into.checked[i] += from.checked[i];
  }
}

}  // namespace

SuccessorCost successor_cost_serial(std::uint64_t count) {
  return {count, successor_calls(0, count)};
}

SuccessorCost successor_cost_parallel(std::uint64_t count) {
  const auto chunks = static_cast<std::int64_t>((count + kSuccessorChunk - 1) / kSuccessorChunk);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kSuccessorChunk;
    total += successor_calls(lo, std::min(count, lo + kSuccessorChunk));
  }
  return {count, total};
}

DualCensus dual_census_serial(std::uint64_t lo, std::uint64_t hi) {
  DualCensus census;
  for (std::uint64_t v = lo; v < hi; ++v) tally(census, v);
  return census;
}

DualCensus dual_census_parallel(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t less = 0, equal = 0, greater = 0;
  const auto n = static_cast<std::int64_t>(hi > lo ? hi - lo : 0);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : less, equal, greater)
  for (std::int64_t i = 0; i < n; ++i) {
    DualCensus local;
    tally(local, lo + static_cast<std::uint64_t>(i));
    less += local.less;
    equal += local.equal;
    greater += local.greater;
  }
  return {less, equal, greater};
}

const char* to_string(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::Compare: return "compare";
    case BinaryOp::Divide: return "divide";
    case BinaryOp::Remainder: return "remainder";
  }
  return "?";
}

std::uint64_t OracleReport::total_mismatches() const {
  std::uint64_t total = 0;
  for (auto m : mismatches) total += m;
  return total;
}

OracleReport oracle_sweep_serial(const std::vector<OperandPair>& pairs) {
  OracleReport report;
  for (const auto& p : pairs) check_pair(p, report);
  return report;
}

OracleReport oracle_sweep_parallel(const std::vector<OperandPair>& pairs) {
  OracleReport report;
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel
  {
    OracleReport local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < n; ++i) check_pair(pairs[static_cast<std::size_t>(i)], local);
#pragma omp critical
    merge(report, local);
  }
  return report;
}

std::vector<OperandPair> grid_pairs(std::uint64_t side) {
  std::vector<OperandPair> out;
  out.reserve(side * side);
  for (std::uint64_t x = 0; x < side; ++x) {
    for (std::uint64_t y = 0; y < side; ++y) out.push_back({NatRef(x), NatRef(y)});
  }
  return out;
}

std::vector<OperandPair> random_pairs(std::size_t count, unsigned bits, std::uint64_t seed) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  std::vector<OperandPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({NatRef(mpz_class(rng.get_z_bits(bits))), NatRef(mpz_class(rng.get_z_bits(bits)))});
  }
  return out;
}

}  // namespace catnum::kernels
