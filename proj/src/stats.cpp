#include "selest/stats.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>
#include <vector>

#include "selest/error.hpp"
#include "selest/sampling.hpp"

namespace selest {

double AttributeStats::histogram_fraction() const {
  if (!histogram) return 0.0;
  return std::max(0.0, 1.0 - mcv_fraction());
}

AttributeStats analyze_column(std::span<const NullableScalar> values, std::uint32_t statistics_target,
                              std::uint64_t sample_seed, std::size_t sample_cap) {
  if (statistics_target < 1) throw InvalidInput("invalid statistics target");
  if (sample_cap < 1) throw InvalidInput("invalid sample cap");

  AttributeStats stats;
  stats.statistics_target = statistics_target;

  const auto rows = sample_rows(values.size(), sample_cap, sample_seed);
  stats.row_count = rows.size();
  if (rows.empty()) return stats;

  std::vector<double> non_null;
  non_null.reserve(rows.size());
  for (const auto row : rows) {
    if (values[row]) non_null.push_back(*values[row]);
  }
  stats.null_frac = static_cast<double>(rows.size() - non_null.size()) / static_cast<double>(rows.size());
  if (non_null.empty()) return stats;

  stats.mcv = build_mcv(non_null, statistics_target);

  const auto common = stats.mcv.values();
  const std::unordered_set<double> common_set(common.begin(), common.end());
  std::vector<double> residual;
  residual.reserve(non_null.size());
  std::copy_if(non_null.begin(), non_null.end(), std::back_inserter(residual),
               [&](double v) { return !common_set.contains(v); });
  if (residual.empty()) return stats;

  std::sort(residual.begin(), residual.end());
  std::size_t distinct_count = 1;
  for (std::size_t i = 1; i < residual.size(); ++i) {
    if (residual[i] != residual[i - 1]) ++distinct_count;
  }
  const std::size_t bins =
      std::min<std::size_t>(statistics_target, std::max<std::size_t>(1, distinct_count - 1));
  stats.histogram = build_equi_depth(residual, bins);
  return stats;
}

AttributeStats analyze_column(std::span<const NullableScalar> values, std::uint32_t statistics_target,
                              std::uint64_t sample_seed) {
  return analyze_column(values, statistics_target, sample_seed,
                        kSampleRowsPerTarget * static_cast<std::size_t>(std::max<std::uint32_t>(statistics_target, 1)));
}

}  // namespace selest
