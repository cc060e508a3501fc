#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "selest/estimator.hpp"
#include "selest/stats.hpp"

namespace selest {

/**
 * A range over the reals. Infinite bounds use +-infinity and are always exclusive. Ranges that would contain no
 * point (e.g. [5,5)) are canonicalized to the empty range, as are explicit "empty" literals.
 */
struct RangeValue {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_closed = false;
  bool upper_closed = false;
  bool empty = true;

  /// Throws InvalidInput if lower > upper, lower is +inf, upper is -inf or a bound is NaN.
  static RangeValue make(double lower, double upper, bool lower_closed = true, bool upper_closed = false);
  static RangeValue make_empty() { return RangeValue{}; }

  bool lower_infinite() const { return !empty && lower == -std::numeric_limits<double>::infinity(); }
  bool upper_infinite() const { return !empty && upper == std::numeric_limits<double>::infinity(); }

  bool operator==(const RangeValue&) const = default;
};

using NullableRange = std::optional<RangeValue>;

/// Literal text: "[a,b]", "[a,b)", "(a,b]", "(a,b)" with "-inf"/"inf" bounds, or "empty". Blank text is null.
/// Throws FormatError on anything else.
NullableRange parse_range_literal(std::string_view text);
std::string format_range_literal(const NullableRange& range);

/// Positional range operators. Containment operators are deliberately absent.
enum class RangeOp { kStrictlyLeft, kStrictlyRight, kNoExtendRight, kNoExtendLeft, kOverlaps };

std::string_view to_string(RangeOp op);
/// strictly-left, strictly-right, no-extend-right, no-extend-left, overlaps. Throws UnsupportedOperator otherwise
/// (containment included).
RangeOp parse_range_op(std::string_view name);

/// Exact semantics of `x op y`. An empty range never satisfies any positional operator.
bool satisfies(const RangeValue& x, const RangeValue& y, RangeOp op);

/**
 * Orders range bounds including their inclusivity: an inclusive lower bound at v sits just before v, an exclusive
 * one just after; upper bounds the other way round. Infinite bounds have offset 0. With this encoding
 *   x << y  <=>  upper_edge(x) <= lower_edge(y)
 *   x &< y  <=>  upper_edge(x) <= upper_edge(y)
 *   x &> y  <=>  lower_edge(x) >= lower_edge(y)
 * for non-empty ranges.
 */
struct BoundEdge {
  double value;
  int offset;
  auto operator<=>(const BoundEdge&) const = default;
};
BoundEdge lower_edge(const RangeValue& r);
BoundEdge upper_edge(const RangeValue& r);

/// Statistics of a range column: two bound histograms plus the masses the histograms cannot represent.
struct RangeStats {
  double null_frac = 0.0;
  /// Share of non-null rows that are empty.
  double empty_frac = 0.0;
  /// Shares of non-empty rows with an infinite lower / upper bound.
  double lower_inf_frac = 0.0;
  double upper_inf_frac = 0.0;
  /// Built over the finite bounds of non-empty rows; absent when there are none.
  std::optional<AttributeStats> lower_stats;
  std::optional<AttributeStats> upper_stats;
  std::uint64_t row_count = 0;
  std::uint32_t statistics_target = 1;

  bool operator==(const RangeStats&) const = default;
};

RangeStats analyze_range_column(std::span<const NullableRange> values, std::uint32_t statistics_target,
                                std::uint64_t sample_seed, std::size_t sample_cap);

std::string save_range_stats(const RangeStats& stats);
RangeStats load_range_stats(std::string_view document);

using AnyStats = std::variant<AttributeStats, RangeStats>;
/// Loads either document type; range documents are recognized by their "kind": "range" field.
AnyStats load_any_stats(std::string_view document);

/// How to read `X &> Y`: as printed in the reduction table, P(X.lower < Y.lower), or with the conventional
/// "does not extend to the left" meaning, P(X.lower >= Y.lower).
enum class NoExtendLeftReading { kPrinted, kConventional };

/**
 * Join selectivity of `X op Y` by reduction to scalar LT joins on the bound statistics:
 *
 *   X << Y : X.upper < Y.lower          X >> Y : Y << X
 *   X &< Y : X.upper < Y.upper          X &> Y : see NoExtendLeftReading
 *   X && Y : 1 - P(X << Y) - P(X >> Y)
 *
 * Bound independence is assumed. Nulls and empty ranges never qualify; infinite bounds are resolved exactly and
 * the finite x finite share goes through join_selectivity.
 */
Selectivity range_join_selectivity(const RangeStats& sx, const RangeStats& sy, RangeOp op,
                                   NoExtendLeftReading reading = NoExtendLeftReading::kPrinted);

}  // namespace selest
