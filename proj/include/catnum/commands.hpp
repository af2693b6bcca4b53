#pragma once

// Command implementations behind the `catnum` executable. Each writes to the
// given streams and returns the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "catnum/bintree.hpp"

namespace catnum::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // usage or parse error
  kArithmetic = 2,  // Underflow, DivisionByZero, ...
  kStepLimit = 3,
};

enum class ValueView { Decimal, Tree, Multiway, Parens };
enum class Report { Decimal, Catsize, Bitsize };

std::optional<ValueView> parse_view(std::string_view name);
std::optional<Report> parse_report(std::string_view name);

/// Decimal-conversion cap in bits: CATNUM_CAP if set and valid, else 10^6.
std::uint64_t default_cap();

/// Decimal when the value has at most cap_bits digits, otherwise
/// "<bitsize b, catsize c>" where b itself falls back to "<catsize k>".
std::string decimal_or_placeholder(const BinTree& x, std::uint64_t cap_bits);
std::string render(const BinTree& x, ValueView view, std::uint64_t cap_bits);

int cmd_eval(std::string_view expr, ValueView view, std::uint64_t cap, std::ostream& out,
             std::ostream& err);
int cmd_analyze(std::string_view expr, std::uint64_t cap, std::ostream& out, std::ostream& err);
/// `from` accepts decimal, tree, multiway or parens text.
int cmd_convert(std::string_view input, ValueView from, ValueView to, std::uint64_t cap,
                std::ostream& out, std::ostream& err);
int cmd_collatz(std::string_view expr, std::optional<std::uint64_t> max_steps, Report report,
                std::uint64_t cap, std::ostream& out, std::ostream& err);
int cmd_primes(std::ostream& out);
int cmd_enumerate(unsigned k, ValueView view, unsigned size_cap, std::uint64_t cap,
                  std::ostream& out, std::ostream& err);
/// Writes to out_path, or to `out` when out_path is empty.
int cmd_dot(std::string_view expr, bool binary, const std::string& out_path, std::ostream& out,
            std::ostream& err);
int cmd_bench(std::uint64_t count, bool serial, std::ostream& out);

}  // namespace catnum::cli
