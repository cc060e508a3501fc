#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "selest/histogram.hpp"
#include "selest/mcv.hpp"

namespace selest {

using NullableScalar = std::optional<double>;

/**
 * Per-attribute statistics. Every analyzed row is either null, a most common value or covered by the
 * histogram; the three shares are
 *
 *   p_null = null_frac
 *   p_mcv  = mcv.total_fraction()            (relative to non-null rows)
 *   p_hist = 1 - p_mcv                        (relative to non-null rows)
 *
 * so that p_null + (1 - p_null) * (p_mcv + p_hist) = 1.
 */
struct AttributeStats {
  double null_frac = 0.0;
  MostCommonValues mcv;
  std::optional<EquiDepthHistogram> histogram;
  std::uint64_t row_count = 0;
  std::uint32_t statistics_target = 1;

  double mcv_fraction() const { return mcv.total_fraction(); }

  /// Share of non-null rows represented by the histogram; 0 when there is no histogram.
  double histogram_fraction() const;

  bool operator==(const AttributeStats&) const = default;
};

inline constexpr std::size_t kSampleRowsPerTarget = 300;

/**
 * Samples min(sample_cap, values.size()) rows with `seed`, then extracts the null fraction, up to
 * statistics_target MCVs from the non-null sample and an equi-depth histogram over the remaining values. The
 * histogram gets statistics_target bins, reduced to (distinct remaining values - 1) but at least 1.
 */
AttributeStats analyze_column(std::span<const NullableScalar> values, std::uint32_t statistics_target,
                              std::uint64_t sample_seed, std::size_t sample_cap);

/// analyze_column with the default sample cap of kSampleRowsPerTarget * statistics_target.
AttributeStats analyze_column(std::span<const NullableScalar> values, std::uint32_t statistics_target,
                              std::uint64_t sample_seed);

/// JSON interchange document. Numbers use the shortest decimal that round-trips.
std::string save_stats(const AttributeStats& stats);

/// Throws FormatError naming the offending field, e.g. "missing field bounds" or "bounds not sorted".
AttributeStats load_stats(std::string_view document);

}  // namespace selest
