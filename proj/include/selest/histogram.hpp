#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace selest {

/**
 * Equi-depth histogram stored as its B+1 sorted bin boundaries.
 *
 * Bin j covers ]bounds[j], bounds[j+1]] and holds 1/B of the attribute's mass. The value distribution inside a
 * bin is assumed uniform, which turns the histogram into a piecewise-linear CDF. Equal adjacent boundaries are
 * allowed and behave as point masses of height 1/B (the CDF steps there).
 */
class EquiDepthHistogram {
 public:
  /// Throws InvalidInput unless bounds has at least two finite, non-decreasing entries.
  explicit EquiDepthHistogram(std::vector<double> bounds);

  std::span<const double> bounds() const { return bounds_; }
  std::size_t bin_count() const { return bounds_.size() - 1; }
  double min() const { return bounds_.front(); }
  double max() const { return bounds_.back(); }

  /// P(X <= c): right-continuous, 0 below min, 1 from max on.
  double cdf(double c) const;

  /// P(X < c): the left limit of cdf at c. Differs from cdf only at zero-width bins.
  double cdf_left(double c) const;

  /// Density of the bin containing c; 0 outside [min, max).
  double pdf(double c) const;

  bool operator==(const EquiDepthHistogram&) const = default;

 private:
  // Value of the CDF at c given the index of the last boundary at or below c (for cdf) or strictly below c (for
  // cdf_left); index == bounds_.size() stands for "no such boundary".
  double interpolate(std::size_t last_below, double c) const;

  std::vector<double> bounds_;
};

/**
 * Builds an equi-depth histogram over all of `values` (sampling happens upstream).
 *
 * After sorting the N values, bounds[j] = sorted[floor(j * (N - 1) / B)], so bounds[0] and bounds[B] are the
 * observed minimum and maximum.
 */
EquiDepthHistogram build_equi_depth(std::span<const double> values, std::size_t bin_count);

}  // namespace selest
