#include "selest/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "selest/error.hpp"

namespace selest {

namespace {

// std distributions are implementation-defined; these keep generated files identical across toolchains.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform_int(std::mt19937_64& rng, double lo, double hi) {
  return std::min(hi, lo + std::floor(uniform01(rng) * (hi - lo + 1.0)));
}

ScalarColumn to_column(std::initializer_list<double> values) {
  ScalarColumn column;
  for (const auto v : values) column.emplace_back(v);
  return column;
}

RangeColumn generate_ranges(std::size_t rows, std::mt19937_64& rng, const RangeMix& mix) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  RangeColumn column;
  column.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double kind = uniform01(rng);
    if (kind < mix.null_frac) {
      column.emplace_back(std::nullopt);
      continue;
    }
    if (kind < mix.null_frac + mix.empty_frac) {
      column.emplace_back(RangeValue::make_empty());
      continue;
    }

    const double width_class = uniform01(rng);
    double width = 0.0;
    if (width_class < 0.6) {
      width = uniform_int(rng, 1, 100);
    } else if (width_class < 0.9) {
      width = uniform_int(rng, 100, 10'000);
    } else {
      width = uniform_int(rng, 10'000, 100'000);
    }
    const double lower = uniform_int(rng, 0, kDatasetDomainMax - width);
    const double upper = lower + width;

    if (kind < mix.null_frac + mix.empty_frac + mix.infinite_frac) {
      if (uniform01(rng) < 0.5) {
        column.emplace_back(RangeValue::make(-kInf, upper, false, false));
      } else {
        column.emplace_back(RangeValue::make(lower, kInf, true, false));
      }
      continue;
    }
    column.emplace_back(RangeValue::make(lower, upper, true, false));
  }
  return column;
}

}  // namespace

DatasetKind parse_dataset_kind(std::string_view name) {
  if (name == "uniform-int") return DatasetKind::kUniformInt;
  if (name == "skewed-int") return DatasetKind::kSkewedInt;
  if (name == "ranges-mixed") return DatasetKind::kRangesMixed;
  if (name == "running-example-r1") return DatasetKind::kRunningExampleR1;
  if (name == "running-example-r2") return DatasetKind::kRunningExampleR2;
  throw InvalidInput("unknown dataset kind: " + std::string(name));
}

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kUniformInt:
      return "uniform-int";
    case DatasetKind::kSkewedInt:
      return "skewed-int";
    case DatasetKind::kRangesMixed:
      return "ranges-mixed";
    case DatasetKind::kRunningExampleR1:
      return "running-example-r1";
    case DatasetKind::kRunningExampleR2:
      return "running-example-r2";
  }
  return "?";
}

Column generate_dataset(DatasetKind kind, std::size_t rows, std::uint64_t seed, const RangeMix& mix) {
  switch (kind) {
    case DatasetKind::kRunningExampleR1:
      return to_column({10, 11, 12, 20, 21, 22, 24, 25, 30, 35, 38, 45});
    case DatasetKind::kRunningExampleR2:
      return to_column({15, 16, 17, 20, 30, 35, 38, 39, 40, 42, 45, 50});
    default:
      break;
  }

  if (rows == 0) throw InvalidInput("rows must be positive");
  std::mt19937_64 rng(seed);

  if (kind == DatasetKind::kRangesMixed) {
    const double special = mix.empty_frac + mix.null_frac + mix.infinite_frac;
    if (mix.empty_frac < 0 || mix.null_frac < 0 || mix.infinite_frac < 0 || special > 1.0) {
      throw InvalidInput("invalid range mix fractions");
    }
    return generate_ranges(rows, rng, mix);
  }

  ScalarColumn column;
  column.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (kind == DatasetKind::kUniformInt) {
      column.emplace_back(uniform_int(rng, 0, kDatasetDomainMax));
    } else {
      const double u = uniform01(rng);
      column.emplace_back(std::floor(kDatasetDomainMax * u * u * u * u));
    }
  }
  return column;
}

}  // namespace selest
