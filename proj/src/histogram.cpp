#include "selest/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "selest/error.hpp"

namespace selest {

EquiDepthHistogram::EquiDepthHistogram(std::vector<double> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.size() < 2) {
    throw InvalidInput("invalid bin count");
  }
  if (!std::all_of(bounds_.begin(), bounds_.end(), [](double b) { return std::isfinite(b); })) {
    throw InvalidInput("bounds not finite");
  }
  if (!std::is_sorted(bounds_.begin(), bounds_.end())) {
    throw InvalidInput("bounds not sorted");
  }
}

double EquiDepthHistogram::interpolate(std::size_t last_below, double c) const {
  if (last_below == bounds_.size()) return 0.0;
  const auto bins = bin_count();
  if (last_below >= bins) return 1.0;
  // bounds_[last_below] <= c < bounds_[last_below + 1] (or < / <= for the left limit), so the width is positive.
  const double lo = bounds_[last_below];
  const double hi = bounds_[last_below + 1];
  return (static_cast<double>(last_below) + (c - lo) / (hi - lo)) / static_cast<double>(bins);
}

double EquiDepthHistogram::cdf(double c) const {
  const auto it = std::upper_bound(bounds_.begin(), bounds_.end(), c);
  if (it == bounds_.begin()) return 0.0;
  return interpolate(static_cast<std::size_t>(it - bounds_.begin()) - 1, c);
}

double EquiDepthHistogram::cdf_left(double c) const {
  const auto it = std::lower_bound(bounds_.begin(), bounds_.end(), c);
  if (it == bounds_.begin()) return 0.0;
  return interpolate(static_cast<std::size_t>(it - bounds_.begin()) - 1, c);
}

double EquiDepthHistogram::pdf(double c) const {
  if (c < bounds_.front() || c >= bounds_.back()) return 0.0;
  const auto it = std::upper_bound(bounds_.begin(), bounds_.end(), c);
  const auto j = static_cast<std::size_t>(it - bounds_.begin()) - 1;
  return 1.0 / static_cast<double>(bin_count()) / (bounds_[j + 1] - bounds_[j]);
}

EquiDepthHistogram build_equi_depth(std::span<const double> values, std::size_t bin_count) {
  if (values.empty()) throw InvalidInput("no data");
  if (bin_count < 1) throw InvalidInput("invalid bin count");

  std::vector<double> sorted(values.begin(), values.end());
  if (!std::all_of(sorted.begin(), sorted.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidInput("non-finite value");
  }
  std::sort(sorted.begin(), sorted.end());

  const std::size_t last = sorted.size() - 1;
  std::vector<double> bounds(bin_count + 1);
  for (std::size_t j = 0; j <= bin_count; ++j) {
    bounds[j] = sorted[j * last / bin_count];
  }
  return EquiDepthHistogram(std::move(bounds));
}

}  // namespace selest
