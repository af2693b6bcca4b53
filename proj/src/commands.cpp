#include "catnum/commands.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "catnum/catnum.hpp"
#include "catnum/dot.hpp"
#include "catnum/expr.hpp"
#include "catnum/kernels.hpp"

namespace catnum::cli {

namespace {

// Runs `body`, mapping library exceptions to exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ExprError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::MalformedWord || e.kind() == ErrorKind::CapExceeded) return kUsage;
    return kArithmetic;
  }
}

BinTree eval_text(std::string_view text) { return eval(parse_expr(text)); }

std::string small_decimal(const BinTree& x) { return to_nat(x, 64).to_string(); }

}  // namespace

std::optional<ValueView> parse_view(std::string_view name) {
  if (name == "decimal") return ValueView::Decimal;
  if (name == "tree") return ValueView::Tree;
  if (name == "multiway") return ValueView::Multiway;
  if (name == "parens") return ValueView::Parens;
  return std::nullopt;
}

std::optional<Report> parse_report(std::string_view name) {
  if (name == "decimal") return Report::Decimal;
  if (name == "catsize") return Report::Catsize;
  if (name == "bitsize") return Report::Bitsize;
  return std::nullopt;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("CATNUM_CAP")) {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end) return v;
  }
  return kDefaultConversionCap;
}

std::string decimal_or_placeholder(const BinTree& x, std::uint64_t cap_bits) {
  if (fits_bits(x, cap_bits)) return to_nat(x, cap_bits).to_string();
  const BinTree bits = bitsize(x);
  const std::string bits_text = fits_bits(bits, cap_bits)
                                    ? to_nat(bits, cap_bits).to_string()
                                    : "<catsize " + small_decimal(catsize(bits)) + ">";
  return "<bitsize " + bits_text + ", catsize " + small_decimal(catsize(x)) + ">";
}

std::string render(const BinTree& x, ValueView view, std::uint64_t cap_bits) {
  switch (view) {
    case ValueView::Decimal: return decimal_or_placeholder(x, cap_bits);
    case ValueView::Tree: return x.to_string();
    case ValueView::Multiway: return m(x).to_string();
    case ValueView::Parens: return cat_show(x);
  }
  return {};
}

int cmd_eval(std::string_view expr, ValueView view, std::uint64_t cap, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    out << render(eval_text(expr), view, cap) << '\n';
    return kOk;
  });
}

int cmd_analyze(std::string_view expr, std::uint64_t cap, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BinTree x = eval_text(expr);
    out << "catsize: " << decimal_or_placeholder(catsize(x), cap) << '\n';
    out << "bitsize: " << decimal_or_placeholder(bitsize(x), cap) << '\n';
    out << "max_tdepth: " << decimal_or_placeholder(max_tdepth(x), cap) << '\n';
    out << "max_mdepth: " << decimal_or_placeholder(max_mdepth(x), cap) << '\n';
    out << "parity: " << (is_odd(x) ? "odd" : "even") << '\n';
    out << "value: " << decimal_or_placeholder(x, cap) << '\n';
    return kOk;
  });
}

int cmd_convert(std::string_view input, ValueView from, ValueView to, std::uint64_t cap,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BinTree x;
    switch (from) {
      case ValueView::Decimal: x = from_nat<BinTree>(NatRef::parse(input)); break;
      case ValueView::Tree: x = BinTree::parse(input); break;
      case ValueView::Multiway: x = t(MultiTree::parse(input)); break;
      case ValueView::Parens: x = t(ParenWord::parse(input)); break;
    }
    out << render(x, to, cap) << '\n';
    return kOk;
  });
}

int cmd_collatz(std::string_view expr, std::optional<std::uint64_t> max_steps, Report report,
                std::uint64_t cap, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<std::size_t> bound;
    if (max_steps) bound = static_cast<std::size_t>(*max_steps);
    std::uint64_t emitted = 0;
    const bool reached_zero = for_each_syracuse(eval_text(expr), bound, [&](const BinTree& v) {
      switch (report) {
        case Report::Decimal: out << decimal_or_placeholder(v, cap); break;
        case Report::Catsize: out << decimal_or_placeholder(catsize(v), cap); break;
        case Report::Bitsize: out << decimal_or_placeholder(bitsize(v), cap); break;
      }
      out << '\n';
      ++emitted;
    });
    if (reached_zero) return kOk;
    err << "step limit reached after " << emitted << " values\n";
    return kStepLimit;
  });
}

int cmd_primes(std::ostream& out) {
  // The tabled primes first, then Proth, whose sizes are computed here only.
  constexpr PrimeKind order[] = {
      PrimeKind::Mersenne,      PrimeKind::GeneralizedFermat, PrimeKind::Cullen,
      PrimeKind::Woodall,       PrimeKind::SophieGermain,     PrimeKind::TwinLow,
      PrimeKind::TwinHigh,      PrimeKind::Proth,
  };
  out << std::left << std::setw(20) << "kind" << std::right << std::setw(12) << "bitsize"
      << std::setw(9) << "catsize" << '\n';
  for (PrimeKind kind : order) {
    const BinTree p = record_prime<BinTree>(kind);
    out << std::left << std::setw(20) << to_string(kind) << std::right << std::setw(12)
        << small_decimal(bitsize(p)) << std::setw(9) << small_decimal(catsize(p));
    if (kind == PrimeKind::Proth) out << "  (derived)";
    out << '\n';
  }
  return kOk;
}

int cmd_enumerate(unsigned k, ValueView view, unsigned size_cap, std::uint64_t cap,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (const BinTree& x : enumerate_catsized<BinTree>(k, size_cap)) {
      out << render(x, view, cap) << '\n';
    }
    return kOk;
  });
}

int cmd_dot(std::string_view expr, bool binary, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const DagExport dag = build_dag(eval_text(expr), binary ? DagView::Binary : DagView::Multiway);
    if (out_path.empty()) {
      write_dot(dag, out);
      return kOk;
    }
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kUsage;
    }
    write_dot(dag, file);
    if (!file.flush()) {
      err << "error: failed writing '" << out_path << "'\n";
      return kUsage;
    }
    return kOk;
  });
}

int cmd_bench(std::uint64_t count, bool serial, std::ostream& out) {
  const kernels::SuccessorCost cost =
      serial ? kernels::successor_cost_serial(count) : kernels::successor_cost_parallel(count);
  out << "count: " << cost.count << '\n';
  out << "total_calls: " << cost.total_calls << '\n';
  out << "average: " << std::fixed << std::setprecision(4) << cost.average() << '\n';
  out << "mode: " << (serial ? std::string("serial")
                             : "parallel (" + std::to_string(omp_get_max_threads()) + " threads)")
      << '\n';
  return kOk;
}

}  // namespace catnum::cli
