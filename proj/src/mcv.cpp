#include "selest/mcv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "selest/error.hpp"

namespace selest {

MostCommonValues::MostCommonValues(std::vector<double> values, std::vector<double> fractions)
    : values_(std::move(values)), fractions_(std::move(fractions)) {
  if (values_.size() != fractions_.size()) {
    throw InvalidInput("mcv values and fractions differ in length");
  }
  for (const auto f : fractions_) {
    if (!(f > 0.0 && f <= 1.0)) throw InvalidInput("mcv fraction outside (0,1]");
  }
  if (total_fraction() > 1.0 + 1e-12) throw InvalidInput("mcv fractions sum above 1");

  for (const auto v : values_) {
    if (!std::isfinite(v)) throw InvalidInput("mcv value not finite");
  }
  auto sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("mcv values not distinct");
  }
}

double MostCommonValues::total_fraction() const {
  return std::accumulate(fractions_.begin(), fractions_.end(), 0.0);
}

double MostCommonValues::fraction_of(double v) const {
  const auto it = std::find(values_.begin(), values_.end(), v);
  return it == values_.end() ? 0.0 : fractions_[static_cast<std::size_t>(it - values_.begin())];
}

MostCommonValues build_mcv(std::span<const double> values, std::size_t max_entries) {
  if (values.empty() || max_entries == 0) return {};

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::pair<double, std::size_t>> counts;
  for (auto it = sorted.begin(); it != sorted.end();) {
    const auto run_end = std::upper_bound(it, sorted.end(), *it);
    const auto count = static_cast<std::size_t>(run_end - it);
    if (count >= 2) counts.emplace_back(*it, count);
    it = run_end;
  }

  // counts is in value order, so a stable sort by count keeps the smaller value first among ties.
  std::stable_sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (counts.size() > max_entries) counts.resize(max_entries);

  std::vector<double> mcv_values;
  std::vector<double> mcv_fractions;
  mcv_values.reserve(counts.size());
  mcv_fractions.reserve(counts.size());
  const auto total = static_cast<double>(values.size());
  for (const auto& [value, count] : counts) {
    mcv_values.push_back(value);
    mcv_fractions.push_back(static_cast<double>(count) / total);
  }
  return MostCommonValues(std::move(mcv_values), std::move(mcv_fractions));
}

double mcv_restriction_selectivity(const MostCommonValues& mcv, double c, ScalarOp op) {
  double selectivity = 0.0;
  const auto values = mcv.values();
  const auto fractions = mcv.fractions();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (evaluate(op, values[i], c)) selectivity += fractions[i];
  }
  return selectivity;
}

}  // namespace selest
