#pragma once

#include <cstdint>
#include <span>

#include "selest/ranges.hpp"
#include "selest/scalar_op.hpp"
#include "selest/stats.hpp"

namespace selest {

/// Exact qualifying count over a relation (restriction) or a Cartesian product (join).
struct ExactCount {
  std::uint64_t qualifying = 0;
  std::uint64_t total = 0;

  double selectivity() const { return static_cast<double>(qualifying) / static_cast<double>(total); }
  bool operator==(const ExactCount&) const = default;
};

/// Counts non-null v with `v op c`; total includes nulls. Throws InvalidInput on empty input.
ExactCount exact_restriction(std::span<const NullableScalar> values, double c, ScalarOp op);

/// Counts non-null pairs with `x op y` by sorting ys and ranking each x, O((N + M) log M).
ExactCount exact_join(std::span<const NullableScalar> xs, std::span<const NullableScalar> ys, ScalarOp op);

/// Counts pairs with `x op y` under `satisfies` semantics, via sorted bound edges rather than a nested loop.
ExactCount exact_range_join(std::span<const NullableRange> xs, std::span<const NullableRange> ys, RangeOp op);

}  // namespace selest
