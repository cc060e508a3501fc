#include "selest/estimator.hpp"

#include <algorithm>
#include <cstddef>
#include <span>

#include "selest/error.hpp"

namespace selest {

namespace {

// CDF of a histogram at s, given how many boundaries lie at or below s (right value) or strictly below s (left
// limit). Matches EquiDepthHistogram::cdf / cdf_left bit for bit.
double cdf_at_position(std::span<const double> bounds, std::size_t boundaries_passed, double s) {
  if (boundaries_passed == 0) return 0.0;
  const std::size_t bins = bounds.size() - 1;
  const std::size_t j = boundaries_passed - 1;
  if (j >= bins) return 1.0;
  return (static_cast<double>(j) + (s - bounds[j]) / (bounds[j + 1] - bounds[j])) / static_cast<double>(bins);
}

// How one side of a join is split between its MCV list and its histogram, relative to its non-null rows.
struct Partition {
  const MostCommonValues* mcv;
  const EquiDepthHistogram* histogram;
  double histogram_weight;
  // Multiplier turning raw MCV sums into their share of the non-null rows. Without a histogram the MCV list is
  // taken to describe every non-null row.
  double mcv_scale;
};

Partition partition_of(const AttributeStats& stats) {
  const bool has_histogram = stats.histogram.has_value();
  if (!has_histogram && stats.mcv.empty()) throw InsufficientStatistics();
  const double mcv_total = stats.mcv_fraction();
  return Partition{
      .mcv = &stats.mcv,
      .histogram = has_histogram ? &*stats.histogram : nullptr,
      .histogram_weight = stats.histogram_fraction(),
      .mcv_scale = has_histogram || mcv_total <= 0.0 ? 1.0 : 1.0 / mcv_total,
  };
}

// P(X < Y) given that neither side is null; not clamped.
double null_free_lt(const Partition& x, const Partition& y) {
  double estimate = 0.0;
  if (x.histogram && y.histogram) {
    estimate += x.histogram_weight * y.histogram_weight * join_lt_hist(*x.histogram, *y.histogram).value();
  }
  if (x.histogram && !y.mcv->empty()) {
    estimate += x.histogram_weight * y.mcv_scale * join_lt_hist_mcv(*x.histogram, *y.mcv).value();
  }
  if (!x.mcv->empty() && y.histogram) {
    estimate += x.mcv_scale * y.histogram_weight * join_lt_mcv_hist(*x.mcv, *y.histogram).value();
  }
  if (!x.mcv->empty() && !y.mcv->empty()) {
    estimate += x.mcv_scale * y.mcv_scale * join_lt_mcv_mcv(*x.mcv, *y.mcv, ScalarOp::kLt).value();
  }
  return estimate;
}

double null_free_eq(const Partition& x, const Partition& y) {
  if (x.mcv->empty() || y.mcv->empty()) return 0.0;
  return x.mcv_scale * y.mcv_scale * join_lt_mcv_mcv(*x.mcv, *y.mcv, ScalarOp::kEq).value();
}

}  // namespace

Selectivity restriction_lt_hist(const EquiDepthHistogram& histogram, double c) {
  return Selectivity(histogram.cdf_left(c));
}

Selectivity restriction_selectivity(const AttributeStats& stats, double c, ScalarOp op) {
  if (stats.null_frac >= 1.0) return Selectivity(0.0);
  const auto part = partition_of(stats);

  double histogram_part = 0.0;
  if (part.histogram) {
    switch (op) {
      case ScalarOp::kLt:
        histogram_part = part.histogram->cdf_left(c);
        break;
      case ScalarOp::kLe:
        histogram_part = part.histogram->cdf(c);
        break;
      case ScalarOp::kGt:
        histogram_part = 1.0 - part.histogram->cdf(c);
        break;
      case ScalarOp::kGe:
        histogram_part = 1.0 - part.histogram->cdf_left(c);
        break;
      case ScalarOp::kEq:
        histogram_part = part.histogram->cdf(c) - part.histogram->cdf_left(c);
        break;
    }
  }
  const double mcv_part = part.mcv_scale * mcv_restriction_selectivity(*part.mcv, c, op);
  return Selectivity((1.0 - stats.null_frac) * (mcv_part + part.histogram_weight * histogram_part));
}

Selectivity join_lt_hist(const EquiDepthHistogram& hx, const EquiDepthHistogram& hy) {
  const auto bx = hx.bounds();
  const auto by = hy.bounds();
  const std::size_t nx = bx.size();
  const std::size_t ny = by.size();

  // Below the larger of the two minima either F_X or f_Y is zero, so every piece there contributes nothing.
  const double start = std::max(bx.front(), by.front());
  std::size_t i = static_cast<std::size_t>(std::lower_bound(bx.begin(), bx.end(), start) - bx.begin());
  std::size_t j = static_cast<std::size_t>(std::lower_bound(by.begin(), by.end(), start) - by.begin());

  double prev_fx = cdf_at_position(bx, i, start);
  double prev_fy = cdf_at_position(by, j, start);
  double twice_selectivity = 0.0;

  while (i < nx && j < ny) {
    const double s = std::min(bx[i], by[j]);
    const double fx_left = cdf_at_position(bx, i, s);
    const double fy_left = cdf_at_position(by, j, s);
    while (i < nx && bx[i] == s) ++i;
    while (j < ny && by[j] == s) ++j;
    const double fx = cdf_at_position(bx, i, s);
    const double fy = cdf_at_position(by, j, s);

    // Trapezoid over the linear piece ending at s, then the point mass of Y at s (nonzero only for tied bounds).
    twice_selectivity += (prev_fx + fx_left) * (fy_left - prev_fy);
    twice_selectivity += 2.0 * fx_left * (fy - fy_left);

    prev_fx = fx;
    prev_fy = fy;
  }

  // X is exhausted: F_X = 1 from here on, so the rest of Y's mass qualifies in full.
  if (j < ny) twice_selectivity += 2.0 * (1.0 - prev_fy);

  return Selectivity(twice_selectivity / 2.0);
}

Selectivity join_lt_mcv_mcv(const MostCommonValues& mx, const MostCommonValues& my, ScalarOp op) {
  double selectivity = 0.0;
  const auto values = my.values();
  const auto fractions = my.fractions();
  for (std::size_t j = 0; j < values.size(); ++j) {
    selectivity += fractions[j] * mcv_restriction_selectivity(mx, values[j], op);
  }
  return Selectivity(selectivity);
}

Selectivity join_lt_mcv_hist(const MostCommonValues& mx, const EquiDepthHistogram& hy) {
  double selectivity = 0.0;
  const auto values = mx.values();
  const auto fractions = mx.fractions();
  for (std::size_t i = 0; i < values.size(); ++i) {
    selectivity += fractions[i] * (1.0 - hy.cdf(values[i]));
  }
  return Selectivity(selectivity);
}

Selectivity join_lt_hist_mcv(const EquiDepthHistogram& hx, const MostCommonValues& my) {
  double selectivity = 0.0;
  const auto values = my.values();
  const auto fractions = my.fractions();
  for (std::size_t j = 0; j < values.size(); ++j) {
    selectivity += fractions[j] * hx.cdf_left(values[j]);
  }
  return Selectivity(selectivity);
}

Selectivity join_selectivity(const AttributeStats& sx, const AttributeStats& sy, ScalarOp op) {
  if (op == ScalarOp::kGt) return join_selectivity(sy, sx, ScalarOp::kLt);

  if (sx.null_frac >= 1.0 || sy.null_frac >= 1.0) return Selectivity(0.0);
  const double non_null = (1.0 - sx.null_frac) * (1.0 - sy.null_frac);
  const auto x = partition_of(sx);
  const auto y = partition_of(sy);

  double conditional = 0.0;
  switch (op) {
    case ScalarOp::kLt:
      conditional = null_free_lt(x, y);
      break;
    case ScalarOp::kGe:
      conditional = 1.0 - std::clamp(null_free_lt(x, y), 0.0, 1.0);
      break;
    case ScalarOp::kLe:
      conditional = null_free_lt(x, y) + null_free_eq(x, y);
      break;
    case ScalarOp::kEq:
      conditional = null_free_eq(x, y);
      break;
    case ScalarOp::kGt:
      break;
  }
  return Selectivity(non_null * std::clamp(conditional, 0.0, 1.0));
}

}  // namespace selest
