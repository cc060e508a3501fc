#pragma once

#include <algorithm>
#include <compare>

#include "selest/histogram.hpp"
#include "selest/mcv.hpp"
#include "selest/scalar_op.hpp"
#include "selest/stats.hpp"

namespace selest {

/// Fraction of rows (or of the Cartesian product, for joins) that satisfy a predicate. Always within [0,1].
class Selectivity {
 public:
  constexpr Selectivity() = default;
  /// Clamps to [0,1] so small floating excursions from composed estimates never leak out.
  constexpr explicit Selectivity(double value) : value_(std::clamp(value, 0.0, 1.0)) {}

  constexpr double value() const { return value_; }
  constexpr auto operator<=>(const Selectivity&) const = default;

 private:
  double value_ = 0.0;
};

// ---------------------------------------------------------------------------------------------------------------
// Restriction (attribute vs constant)
// ---------------------------------------------------------------------------------------------------------------

/// P(X < c) read off the histogram CDF.
Selectivity restriction_lt_hist(const EquiDepthHistogram& histogram, double c);

/**
 * Selectivity of `X op c` over all analyzed rows.
 *
 * Nulls never qualify. The MCV part is summed exactly; the histogram part uses P(X < c) and the identities
 * P(X >= c) = 1 - P(X < c), P(X <= c) = P(X < c) + P(X = c), P(X > c) = 1 - P(X <= c). The histogram carries
 * equality mass only at zero-width bins. Throws InsufficientStatistics if non-null rows exist but neither an MCV list nor
 * a histogram does.
 */
Selectivity restriction_selectivity(const AttributeStats& stats, double c, ScalarOp op);

// ---------------------------------------------------------------------------------------------------------------
// Join (attribute vs attribute of another relation)
// ---------------------------------------------------------------------------------------------------------------

/**
 * P(X < Y) for two histogram-distributed attributes, i.e. the integral of F_X * f_Y.
 *
 * F_X * f_Y is linear between consecutive boundaries of the merged boundary set, so the trapezoid rule on those
 * pieces is exact:
 *
 *   P(X < Y) = 1/2 * sum_k (F_X(s_k) + F_X(s_k+1)) * (F_Y(s_k+1) - F_Y(s_k))
 *
 * Both boundary arrays are walked in parallel with running indices, so each CDF value costs O(1) and the whole
 * estimate O(B_X + B_Y). The walk starts at the first boundary where both supports overlap and, once X is
 * exhausted, adds the remaining Y mass in one step. Zero-width bins are point masses: at such a boundary the
 * jump of F_Y is weighted with the left limit of F_X.
 */
Selectivity join_lt_hist(const EquiDepthHistogram& hx, const EquiDepthHistogram& hy);

/// sum_j my.fractions[j] * mcv_restriction_selectivity(mx, my.values[j], op). Weighted by both MCV masses.
Selectivity join_lt_mcv_mcv(const MostCommonValues& mx, const MostCommonValues& my, ScalarOp op);

/// P(X < Y) with X restricted to its MCVs and Y histogram-distributed: sum_i mx.fractions[i] * P(Y > mx.values[i]).
Selectivity join_lt_mcv_hist(const MostCommonValues& mx, const EquiDepthHistogram& hy);

/// Mirror of join_lt_mcv_hist: X histogram-distributed, Y in its MCVs: sum_j my.fractions[j] * P(X < my.values[j]).
Selectivity join_lt_hist_mcv(const EquiDepthHistogram& hx, const MostCommonValues& my);

/**
 * Selectivity of `X op Y` over the Cartesian product, combining the null / MCV / histogram partitions of both
 * sides. The null-free LT estimate is
 *
 *   p_hist_X p_hist_Y s_hist,hist + p_hist_X p_mcv_Y s_hist,mcv + p_mcv_X p_hist_Y s_mcv,hist + p_mcv_X p_mcv_Y s_mcv,mcv
 *
 * and the final value is (1 - p_null_X)(1 - p_null_Y) times the operator-specific null-free estimate:
 * GE = 1 - LT, LE = LT + MCV equality mass, GT(X, Y) = LT(Y, X).
 */
Selectivity join_selectivity(const AttributeStats& sx, const AttributeStats& sy, ScalarOp op);

}  // namespace selest
