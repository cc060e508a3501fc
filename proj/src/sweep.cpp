#include "selest/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "selest/error.hpp"
#include "selest/estimator.hpp"
#include "selest/format.hpp"
#include "selest/oracle.hpp"

namespace selest {

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

std::uint32_t parse_target(std::string_view text) {
  const auto value = parse_number(text);
  if (!value || *value < 1 || *value > std::numeric_limits<std::uint32_t>::max() || std::floor(*value) != *value) {
    throw InvalidInput("invalid statistics target: " + std::string(text));
  }
  return static_cast<std::uint32_t>(*value);
}

// Single estimates take well under a microsecond at small targets, so repeat until the clock has something to
// measure and report the mean.
template <typename Estimate>
double mean_call_time_us(Estimate&& estimate) {
  constexpr double kMinimumUs = 1000.0;
  constexpr std::size_t kMaxCalls = 1'000'000;
  std::size_t calls = 0;
  const auto start = Clock::now();
  double elapsed = 0.0;
  do {
    estimate();
    ++calls;
    elapsed = micros_since(start);
  } while (elapsed < kMinimumUs && calls < kMaxCalls);
  return elapsed / static_cast<double>(calls);
}

template <typename Analyze, typename Estimate>
std::vector<ExperimentRow> run_sweep(std::span<const std::uint32_t> targets, double exact, Analyze&& analyze,
                                     Estimate&& estimate) {
  if (targets.empty()) throw InvalidInput("no statistics targets");
  std::vector<std::uint32_t> ordered(targets.begin(), targets.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  std::vector<ExperimentRow> rows;
  rows.reserve(ordered.size());
  for (const auto target : ordered) {
    ExperimentRow row;
    row.statistics_target = target;

    const auto build_start = Clock::now();
    const auto stats = analyze(target);
    row.build_time_us = micros_since(build_start);
    const auto& sx = stats.first;
    const auto& sy = stats.second;

    row.estimate = estimate(sx, sy);
    row.est_time_us = mean_call_time_us([&] { return estimate(sx, sy); });
    row.exact = exact;
    row.error = std::abs(row.estimate - row.exact);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<std::uint32_t> parse_targets(std::string_view text) {
  text = trim(text);
  std::vector<std::uint32_t> targets;
  if (text.find(':') != std::string_view::npos) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
      throw InvalidInput("targets must be LO:HI:STEP");
    }
    const auto lo = parse_target(text.substr(0, first));
    const auto hi = parse_target(text.substr(first + 1, second - first - 1));
    const auto step = parse_target(text.substr(second + 1));
    if (hi < lo) throw InvalidInput("targets range is empty");
    for (std::uint64_t t = lo; t <= hi; t += step) targets.push_back(static_cast<std::uint32_t>(t));
  } else {
    std::size_t begin = 0;
    while (begin <= text.size()) {
      const auto end = std::min(text.find(',', begin), text.size());
      targets.push_back(parse_target(text.substr(begin, end - begin)));
      begin = end + 1;
    }
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

std::vector<ExperimentRow> run_scalar_sweep(std::span<const NullableScalar> xs, std::span<const NullableScalar> ys,
                                            ScalarOp op, std::span<const std::uint32_t> targets, std::uint64_t seed) {
  const double exact = exact_join(xs, ys, op).selectivity();
  return run_sweep(
      targets, exact,
      [&](std::uint32_t target) {
        return std::pair{analyze_column(xs, target, seed, xs.size()), analyze_column(ys, target, seed, ys.size())};
      },
      [op](const AttributeStats& sx, const AttributeStats& sy) { return join_selectivity(sx, sy, op).value(); });
}

std::vector<ExperimentRow> run_range_sweep(std::span<const NullableRange> xs, std::span<const NullableRange> ys,
                                           RangeOp op, std::span<const std::uint32_t> targets, std::uint64_t seed,
                                           NoExtendLeftReading reading) {
  const double exact = exact_range_join(xs, ys, op).selectivity();
  return run_sweep(
      targets, exact,
      [&](std::uint32_t target) {
        return std::pair{analyze_range_column(xs, target, seed, xs.size()),
                         analyze_range_column(ys, target, seed, ys.size())};
      },
      [op, reading](const RangeStats& sx, const RangeStats& sy) {
        return range_join_selectivity(sx, sy, op, reading).value();
      });
}

void write_sweep_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.statistics_target << ',' << format_number(row.estimate) << ',' << format_number(row.exact) << ','
        << format_number(row.error) << ',' << format_number(row.est_time_us) << ','
        << format_number(row.build_time_us) << '\n';
  }
}

std::vector<ExperimentRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kSweepCsvHeader) throw FormatError("results.csv: bad header");

  std::vector<ExperimentRow> rows;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (trim(line).empty()) continue;
    std::vector<double> fields;
    std::size_t begin = 0;
    while (begin <= line.size()) {
      const auto end = std::min(line.find(',', begin), line.size());
      const auto value = parse_number(std::string_view(line).substr(begin, end - begin));
      if (!value) throw FormatError("results.csv:" + std::to_string(number) + ": malformed field");
      fields.push_back(*value);
      begin = end + 1;
    }
    if (fields.size() != 6) throw FormatError("results.csv:" + std::to_string(number) + ": expected 6 fields");
    rows.push_back(ExperimentRow{static_cast<std::uint32_t>(fields[0]), fields[1], fields[2], fields[3], fields[4],
                                 fields[5]});
  }
  return rows;
}

}  // namespace selest
