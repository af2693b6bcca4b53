// catnum: command-line front end for compressed tree arithmetic.

#include <omp.h>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "catnum/commands.hpp"

namespace cli = catnum::cli;

namespace {

const std::map<std::string, cli::ValueView> kViews = {
    {"decimal", cli::ValueView::Decimal},
    {"tree", cli::ValueView::Tree},
    {"multiway", cli::ValueView::Multiway},
    {"parens", cli::ValueView::Parens},
};

const std::map<std::string, cli::Report> kReports = {
    {"decimal", cli::Report::Decimal},
    {"catsize", cli::Report::Catsize},
    {"bitsize", cli::Report::Bitsize},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic on hereditarily run-length compressed natural numbers"};
  app.require_subcommand(1);

  std::uint64_t cap = cli::default_cap();
  app.add_option("--cap", cap, "Decimal conversion cap in bits (env CATNUM_CAP)");

  std::string expr;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  cli::ValueView eval_view = cli::ValueView::Decimal;
  eval->add_option("expr", expr, "Expression, e.g. add(10,5)")->required();
  eval->add_option("--view", eval_view, "decimal|tree|multiway|parens")
      ->transform(CLI::CheckedTransformer(kViews));

  auto* analyze = app.add_subcommand("analyze", "Report size and depth metrics of a value");
  analyze->add_option("expr", expr, "Expression")->required();

  auto* convert = app.add_subcommand("convert", "Convert a value between text formats");
  cli::ValueView from = cli::ValueView::Decimal;
  cli::ValueView to = cli::ValueView::Parens;
  convert->add_option("input", expr, "Value in the --from format")->required();
  convert->add_option("--from", from, "decimal|tree|multiway|parens")
      ->transform(CLI::CheckedTransformer(kViews));
  convert->add_option("--to,--view", to, "decimal|tree|multiway|parens")
      ->transform(CLI::CheckedTransformer(kViews));

  auto* collatz = app.add_subcommand("collatz", "Iterate the Syracuse function until zero");
  std::uint64_t max_steps = 100000;
  cli::Report report = cli::Report::Decimal;
  collatz->add_option("expr", expr, "Starting value")->required();
  collatz->add_option("--max-steps", max_steps, "Maximum number of values to emit")
      ->check(CLI::PositiveNumber);
  collatz->add_option("--report", report, "decimal|catsize|bitsize")
      ->transform(CLI::CheckedTransformer(kReports));

  auto* primes = app.add_subcommand("primes", "Sizes of record-holder primes");

  auto* enumerate = app.add_subcommand("enumerate", "List all values of a given catsize");
  unsigned k = 0;
  unsigned size_cap = 10;
  cli::ValueView enum_view = cli::ValueView::Parens;
  enumerate->add_option("k", k, "Catsize")->required();
  enumerate->add_option("--view", enum_view, "decimal|tree|multiway|parens")
      ->transform(CLI::CheckedTransformer(kViews));
  enumerate->add_option("--size-cap", size_cap, "Largest catsize accepted");

  auto* dot = app.add_subcommand("dot", "Export the value as a DAG with shared subtrees");
  bool binary = false;
  std::string out_path;
  dot->add_option("expr", expr, "Expression")->required();
  dot->add_flag("--binary", binary, "Binary-tree view with edges 0/1");
  dot->add_option("-o", out_path, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Average successor cost over 0..count-1");
  std::uint64_t count = 1 << 20;
  bool serial = false;
  int threads = 0;
  bench->add_option("--count", count, "Number of successor computations")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--serial", serial, "Use the serial reference kernel");
  bench->add_option("--threads", threads, "OpenMP threads (default: runtime choice)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (*eval) return cli::cmd_eval(expr, eval_view, cap, std::cout, std::cerr);
  if (*analyze) return cli::cmd_analyze(expr, cap, std::cout, std::cerr);
  if (*convert) return cli::cmd_convert(expr, from, to, cap, std::cout, std::cerr);
  if (*collatz) return cli::cmd_collatz(expr, max_steps, report, cap, std::cout, std::cerr);
  if (*primes) return cli::cmd_primes(std::cout);
  if (*enumerate) return cli::cmd_enumerate(k, enum_view, size_cap, cap, std::cout, std::cerr);
  if (*dot) return cli::cmd_dot(expr, binary, out_path, std::cout, std::cerr);
  if (*bench) {
    if (threads > 0) omp_set_num_threads(threads);
    return cli::cmd_bench(count, serial, std::cout);
  }
  return cli::kUsage;
}
