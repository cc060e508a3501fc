#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "selest/column_io.hpp"
#include "selest/ranges.hpp"
#include "selest/scalar_op.hpp"

namespace selest {

/// One statistics target of an error-vs-resolution experiment.
struct ExperimentRow {
  std::uint32_t statistics_target = 0;
  double estimate = 0.0;
  double exact = 0.0;
  /// |estimate - exact|: the row-count error divided by the Cartesian product size.
  double error = 0.0;
  /// Mean wall time of one estimation call.
  double est_time_us = 0.0;
  /// Wall time of analyzing both columns.
  double build_time_us = 0.0;

  bool operator==(const ExperimentRow&) const = default;
};

/// "LO:HI:STEP" (inclusive), or a comma-separated list of targets. Result is sorted and deduplicated.
/// Throws InvalidInput on malformed text or a target of 0.
std::vector<std::uint32_t> parse_targets(std::string_view text);

/// Runs the experiment for each target: full-data analysis of both columns, one estimate, and the exact oracle
/// (computed once). Rows come back ordered by target.
std::vector<ExperimentRow> run_scalar_sweep(std::span<const NullableScalar> xs, std::span<const NullableScalar> ys,
                                            ScalarOp op, std::span<const std::uint32_t> targets, std::uint64_t seed);

std::vector<ExperimentRow> run_range_sweep(std::span<const NullableRange> xs, std::span<const NullableRange> ys,
                                           RangeOp op, std::span<const std::uint32_t> targets, std::uint64_t seed,
                                           NoExtendLeftReading reading = NoExtendLeftReading::kPrinted);

inline constexpr std::string_view kSweepCsvHeader =
    "statistics_target,estimate,exact,error,est_time_us,build_time_us";

void write_sweep_csv(std::ostream& out, std::span<const ExperimentRow> rows);
/// Throws FormatError on a wrong header or malformed row.
std::vector<ExperimentRow> read_sweep_csv(std::istream& in);

}  // namespace selest
