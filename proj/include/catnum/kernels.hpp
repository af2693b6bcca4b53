#pragma once

// Data-parallel sweeps over ranges of naturals. Each kernel has a serial
// reference used by the tests and the benchmark; both return identical
// results for the same input.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "catnum/natref.hpp"

namespace catnum::kernels {

struct SuccessorCost {
  std::uint64_t count = 0;
  std::uint64_t total_calls = 0;
  double average() const { return count ? static_cast<double>(total_calls) / count : 0.0; }
};

/// Instrumented successor over 0 .. count-1 on BinTree.
SuccessorCost successor_cost_serial(std::uint64_t count);
SuccessorCost successor_cost_parallel(std::uint64_t count);

/// Outcomes of compare(x, dual(x)) over a range.
struct DualCensus {
  std::uint64_t less = 0;     // x < dual(x)
  std::uint64_t equal = 0;    // x == dual(x)
  std::uint64_t greater = 0;  // x > dual(x): the dual is smaller
};

/// Census over [lo, hi).
DualCensus dual_census_serial(std::uint64_t lo, std::uint64_t hi);
DualCensus dual_census_parallel(std::uint64_t lo, std::uint64_t hi);

enum class BinaryOp { Add, Sub, Mul, Compare, Divide, Remainder };
inline constexpr std::array<BinaryOp, 6> kAllBinaryOps = {
    BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Compare, BinaryOp::Divide,
    BinaryOp::Remainder};
const char* to_string(BinaryOp op) noexcept;

struct OperandPair {
  NatRef x;
  NatRef y;
};

/// Mismatch count per operation, indexed like kAllBinaryOps. Sub runs on the
/// ordered pair (max, min); divide/remainder skip y = 0.
struct OracleReport {
  std::array<std::uint64_t, 6> mismatches{};
  std::array<std::uint64_t, 6> checked{};
  std::uint64_t total_mismatches() const;
};

/// Evaluates each pair on BinTree and compares with GMP arithmetic.
OracleReport oracle_sweep_serial(const std::vector<OperandPair>& pairs);
OracleReport oracle_sweep_parallel(const std::vector<OperandPair>& pairs);

/// All pairs (x, y) with 0 <= x, y < side.
std::vector<OperandPair> grid_pairs(std::uint64_t side);
/// `count` pairs of uniform random values below 2^bits, from a fixed seed.
std::vector<OperandPair> random_pairs(std::size_t count, unsigned bits, std::uint64_t seed);

}  // namespace catnum::kernels
