// Command-line front end: dataset generation, statistics, estimates, exact counts and the error-vs-bins sweep.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "selest/column_io.hpp"
#include "selest/dataset.hpp"
#include "selest/error.hpp"
#include "selest/estimator.hpp"
#include "selest/format.hpp"
#include "selest/oracle.hpp"
#include "selest/ranges.hpp"
#include "selest/stats.hpp"
#include "selest/sweep.hpp"

namespace {

using namespace selest;  // NOLINT

constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Either a scalar or a range operator, decided by its spelling.
struct Operator {
  std::optional<ScalarOp> scalar;
  std::optional<RangeOp> range;
};

Operator parse_operator(const std::string& name) {
  try {
    return {parse_scalar_op(name), std::nullopt};
  } catch (const UnsupportedOperator&) {
  }
  try {
    return {std::nullopt, parse_range_op(name)};
  } catch (const UnsupportedOperator& e) {
    throw UsageError(e.what());
  }
}

NoExtendLeftReading parse_reading(const std::string& name) {
  if (name == "printed") return NoExtendLeftReading::kPrinted;
  if (name == "conventional") return NoExtendLeftReading::kConventional;
  throw UsageError("unknown --no-extend-left-reading: " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw FormatError(path + ": cannot write file");
}

template <typename T>
const T& expect(const Column& column, const std::string& what) {
  const auto* typed = std::get_if<T>(&column);
  if (!typed) throw UsageError(what);
  return *typed;
}

struct GenOptions {
  std::string kind;
  std::size_t rows = 0;
  std::uint64_t seed = 0;
  std::string out;
  RangeMix mix;
};

int run_gen(const GenOptions& opt) {
  DatasetKind kind{};
  try {
    kind = parse_dataset_kind(opt.kind);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  const bool fixed = kind == DatasetKind::kRunningExampleR1 || kind == DatasetKind::kRunningExampleR2;
  if (!fixed && opt.rows < 1) throw UsageError("--rows must be at least 1");
  Column column;
  try {
    column = generate_dataset(kind, opt.rows, opt.seed, opt.mix);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  write_column(opt.out, column);
  return 0;
}

struct AnalyzeOptions {
  std::string in;
  std::uint32_t target = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> sample_cap;
  std::string out;
};

int run_analyze(const AnalyzeOptions& opt) {
  if (opt.target < 1) throw UsageError("--target must be at least 1");
  const auto cap = opt.sample_cap.value_or(kSampleRowsPerTarget * opt.target);
  if (cap < 1) throw UsageError("--sample-cap must be at least 1");
  const auto column = read_column(opt.in);
  std::string document;
  if (const auto* scalars = std::get_if<ScalarColumn>(&column)) {
    document = save_stats(analyze_column(*scalars, opt.target, opt.seed, cap));
  } else {
    document = save_range_stats(analyze_range_column(std::get<RangeColumn>(column), opt.target, opt.seed, cap));
  }
  write_file(opt.out, document);
  return 0;
}

struct EstimateOptions {
  std::string stats_x;
  std::string stats_y;
  std::optional<double> value;
  std::string op;
  std::string reading = "printed";
};

int run_estimate(const EstimateOptions& opt) {
  const auto op = parse_operator(opt.op);
  const auto reading = parse_reading(opt.reading);
  if (opt.stats_y.empty() == !opt.value.has_value()) {
    throw UsageError("give exactly one of --stats-y (join) or --value (restriction)");
  }
  const auto sx = load_any_stats(read_file(opt.stats_x));

  Selectivity result;
  if (opt.value) {
    if (!op.scalar) throw UsageError("restriction estimates take a scalar operator");
    const auto* stats = std::get_if<AttributeStats>(&sx);
    if (!stats) throw UsageError("restriction estimates need scalar statistics");
    result = restriction_selectivity(*stats, *opt.value, *op.scalar);
  } else {
    const auto sy = load_any_stats(read_file(opt.stats_y));
    if (op.scalar) {
      const auto* x = std::get_if<AttributeStats>(&sx);
      const auto* y = std::get_if<AttributeStats>(&sy);
      if (!x || !y) throw UsageError("scalar operators need scalar statistics on both sides");
      result = join_selectivity(*x, *y, *op.scalar);
    } else {
      const auto* x = std::get_if<RangeStats>(&sx);
      const auto* y = std::get_if<RangeStats>(&sy);
      if (!x || !y) throw UsageError("range operators need range statistics on both sides");
      result = range_join_selectivity(*x, *y, *op.range, reading);
    }
  }
  std::cout << format_number(result.value()) << '\n';
  return 0;
}

struct OracleOptions {
  std::string in_x;
  std::string in_y;
  std::optional<double> value;
  std::string op;
};

int run_oracle(const OracleOptions& opt) {
  const auto op = parse_operator(opt.op);
  if (opt.in_y.empty() == !opt.value.has_value()) {
    throw UsageError("give exactly one of --in-y (join) or --value (restriction)");
  }
  const auto xs = read_column(opt.in_x);

  ExactCount count;
  if (opt.value) {
    if (!op.scalar) throw UsageError("restriction counts take a scalar operator");
    count = exact_restriction(expect<ScalarColumn>(xs, "restriction counts need a scalar column"), *opt.value,
                              *op.scalar);
  } else {
    const auto ys = read_column(opt.in_y);
    if (op.scalar) {
      count = exact_join(expect<ScalarColumn>(xs, "scalar operators need scalar columns"),
                         expect<ScalarColumn>(ys, "scalar operators need scalar columns"), *op.scalar);
    } else {
      count = exact_range_join(expect<RangeColumn>(xs, "range operators need range columns"),
                               expect<RangeColumn>(ys, "range operators need range columns"), *op.range);
    }
  }
  std::cout << count.qualifying << '/' << count.total << '\n';
  return 0;
}

struct SweepOptions {
  std::string in_x;
  std::string in_y;
  std::string op;
  std::string targets = "100:10000:100";
  std::uint64_t seed = 0;
  std::string out;
  std::string reading = "printed";
};

int run_sweep_command(const SweepOptions& opt) {
  const auto op = parse_operator(opt.op);
  const auto reading = parse_reading(opt.reading);
  std::vector<std::uint32_t> targets;
  try {
    targets = parse_targets(opt.targets);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }

  const auto xs = read_column(opt.in_x);
  const auto ys = read_column(opt.in_y);
  std::vector<ExperimentRow> rows;
  if (op.scalar) {
    rows = run_scalar_sweep(expect<ScalarColumn>(xs, "scalar operators need scalar columns"),
                            expect<ScalarColumn>(ys, "scalar operators need scalar columns"), *op.scalar, targets,
                            opt.seed);
  } else {
    rows = run_range_sweep(expect<RangeColumn>(xs, "range operators need range columns"),
                           expect<RangeColumn>(ys, "range operators need range columns"), *op.range, targets,
                           opt.seed, reading);
  }

  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw FormatError(opt.out + ": cannot open file for writing");
  write_sweep_csv(out, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selectivity estimation from equi-depth histograms and MCV statistics"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic column file");
  gen_cmd->add_option("--kind", gen.kind, "uniform-int, skewed-int, ranges-mixed, running-example-r1/-r2")
      ->required();
  gen_cmd->add_option("--rows", gen.rows, "Row count (ignored for running-example kinds)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output column file")->required();
  gen_cmd->add_option("--empty-frac", gen.mix.empty_frac, "ranges-mixed: share of empty ranges");
  gen_cmd->add_option("--null-frac", gen.mix.null_frac, "ranges-mixed: share of nulls");
  gen_cmd->add_option("--inf-frac", gen.mix.infinite_frac, "ranges-mixed: share of half-infinite ranges");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Build statistics for a column file");
  analyze_cmd->add_option("--in", analyze.in, "Column file")->required();
  analyze_cmd->add_option("--target", analyze.target, "Statistics target (bins and MCV capacity)")->required();
  analyze_cmd->add_option("--seed", analyze.seed, "Sampling seed");
  analyze_cmd->add_option("--sample-cap", analyze.sample_cap, "Rows to sample (default 300 x target)");
  analyze_cmd->add_option("--out", analyze.out, "Output stats JSON")->required();

  EstimateOptions estimate;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate a selectivity from statistics files");
  estimate_cmd->add_option("--stats-x", estimate.stats_x, "Stats of the left operand")->required();
  estimate_cmd->add_option("--stats-y", estimate.stats_y, "Stats of the right operand (join)");
  estimate_cmd->add_option("--value", estimate.value, "Constant right operand (restriction)");
  estimate_cmd->add_option("--op", estimate.op, "lt, le, gt, ge or a range operator")->required();
  estimate_cmd->add_option("--no-extend-left-reading", estimate.reading, "printed or conventional");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact count from column files");
  oracle_cmd->add_option("--in-x", oracle.in_x, "Left column file")->required();
  oracle_cmd->add_option("--in-y", oracle.in_y, "Right column file (join)");
  oracle_cmd->add_option("--value", oracle.value, "Constant right operand (restriction)");
  oracle_cmd->add_option("--op", oracle.op, "Operator")->required();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimation error versus statistics target");
  sweep_cmd->add_option("--in-x", sweep.in_x, "Left column file")->required();
  sweep_cmd->add_option("--in-y", sweep.in_y, "Right column file")->required();
  sweep_cmd->add_option("--op", sweep.op, "Operator")->required();
  sweep_cmd->add_option("--targets", sweep.targets, "LO:HI:STEP or a comma list");
  sweep_cmd->add_option("--seed", sweep.seed, "Sampling seed");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV")->required();
  sweep_cmd->add_option("--no-extend-left-reading", sweep.reading, "printed or conventional");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*estimate_cmd) return run_estimate(estimate);
    if (*oracle_cmd) return run_oracle(oracle);
    if (*sweep_cmd) return run_sweep_command(sweep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsageError;
}
