#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "selest/scalar_op.hpp"

namespace selest {

/**
 * Singleton histogram of the most common values of an attribute.
 *
 * fractions[i] is the share of the attribute's non-null rows equal to values[i]. Entries are kept in
 * non-increasing fraction order, which estimators do not rely on.
 */
class MostCommonValues {
 public:
  MostCommonValues() = default;

  /// Throws InvalidInput on mismatched lengths, duplicate values, fractions outside (0,1] or a total above 1.
  MostCommonValues(std::vector<double> values, std::vector<double> fractions);

  std::span<const double> values() const { return values_; }
  std::span<const double> fractions() const { return fractions_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// Sum of all fractions, i.e. the MCV-covered share of the non-null rows.
  double total_fraction() const;

  /// Fraction of rows equal to v, 0 if v is not a common value.
  double fraction_of(double v) const;

  bool operator==(const MostCommonValues&) const = default;

 private:
  std::vector<double> values_;
  std::vector<double> fractions_;
};

/// Keeps up to max_entries values occurring at least twice, most frequent first, ties broken by smaller value.
/// Fractions are exact over values.size().
MostCommonValues build_mcv(std::span<const double> values, std::size_t max_entries);

/// Sum of fractions[i] for which `values[i] op c` holds. The result is MCV-mass weighted: it is at most
/// total_fraction(), and callers compose it directly into non-null selectivities.
double mcv_restriction_selectivity(const MostCommonValues& mcv, double c, ScalarOp op);

}  // namespace selest
