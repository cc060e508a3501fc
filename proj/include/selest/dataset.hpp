#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "selest/column_io.hpp"

namespace selest {

enum class DatasetKind { kUniformInt, kSkewedInt, kRangesMixed, kRunningExampleR1, kRunningExampleR2 };

/// uniform-int, skewed-int, ranges-mixed, running-example-r1, running-example-r2. Throws InvalidInput otherwise.
DatasetKind parse_dataset_kind(std::string_view name);
std::string_view to_string(DatasetKind kind);

/// Corner-case mix of the ranges-mixed generator, as fractions of all rows.
struct RangeMix {
  double empty_frac = 0.01;
  double null_frac = 0.01;
  double infinite_frac = 0.01;
};

inline constexpr double kDatasetDomainMax = 1'000'000.0;

/**
 * Deterministic synthetic column for a given seed.
 *
 *  - uniform-int: integers uniform on [0, 1e6].
 *  - skewed-int: integers floor(1e6 * u^4), dense near 0 with many repeats.
 *  - ranges-mixed: integer ranges "[a,b)" on [0, 1e6]; widths short (1-100), medium (100-10^4) and long
 *    (10^4-10^5) in a 60/30/10 ratio, plus empty, null and half-infinite rows per `mix`.
 *  - running-example-r1 / -r2: the fixed 12-value columns; `rows` is ignored.
 *
 * Throws InvalidInput if rows == 0 for a generated kind or the mix fractions are invalid.
 */
Column generate_dataset(DatasetKind kind, std::size_t rows, std::uint64_t seed, const RangeMix& mix = {});

}  // namespace selest
