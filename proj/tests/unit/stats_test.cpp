#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "selest/error.hpp"
#include "selest/stats.hpp"
#include "test_support.hpp"

namespace selest {
namespace {

using testing::nullable;

double partition_total(const AttributeStats& s) {
  return s.null_frac + (1.0 - s.null_frac) * (s.mcv_fraction() + s.histogram_fraction());
}

TEST(AnalyzeColumnTest, RunningExample) {
  const auto stats = analyze_column(nullable(testing::kR1X), 3, 1, 1000);
  EXPECT_EQ(stats.null_frac, 0.0);
  EXPECT_TRUE(stats.mcv.empty());
  ASSERT_TRUE(stats.histogram.has_value());
  EXPECT_EQ(*stats.histogram, EquiDepthHistogram(testing::kHistX));
  EXPECT_EQ(stats.row_count, 12u);
  EXPECT_EQ(stats.statistics_target, 3u);
}

TEST(AnalyzeColumnTest, AllNullColumn) {
  const std::vector<NullableScalar> values(7, std::nullopt);
  const auto stats = analyze_column(values, 5, 1, 100);
  EXPECT_EQ(stats.null_frac, 1.0);
  EXPECT_TRUE(stats.mcv.empty());
  EXPECT_FALSE(stats.histogram.has_value());
}

TEST(AnalyzeColumnTest, SplitsMcvFromHistogram) {
  const auto stats = analyze_column(nullable({1, 1, 1, 1, 2, 3, 4, 5}), 2, 1, 100);
  EXPECT_EQ(stats.null_frac, 0.0);
  ASSERT_EQ(stats.mcv.size(), 1u);
  EXPECT_EQ(stats.mcv.values()[0], 1);
  EXPECT_EQ(stats.mcv.fractions()[0], 0.5);
  ASSERT_TRUE(stats.histogram.has_value());
  EXPECT_EQ(*stats.histogram, EquiDepthHistogram({2, 3, 5}));
}

TEST(AnalyzeColumnTest, ReducesBinsToDistinctResidualValues) {
  // Residual {2, 3}: one bin. Residual {9}: a single degenerate bin.
  const auto two = analyze_column(nullable({2, 3}), 10, 1, 100);
  ASSERT_TRUE(two.histogram);
  EXPECT_EQ(*two.histogram, EquiDepthHistogram({2, 3}));

  const auto one = analyze_column(nullable({4, 4, 9}), 10, 1, 100);
  ASSERT_TRUE(one.histogram);
  EXPECT_EQ(*one.histogram, EquiDepthHistogram({9, 9}));

  const auto none = analyze_column(nullable({4, 4, 5, 5}), 10, 1, 100);
  EXPECT_FALSE(none.histogram);
  EXPECT_NEAR(partition_total(none), 1.0, 1e-12);
}

TEST(AnalyzeColumnTest, NullFractionAndTarget) {
  std::vector<NullableScalar> values = {1.0, std::nullopt, 3.0, std::nullopt};
  const auto stats = analyze_column(values, 4, 0, 10);
  EXPECT_EQ(stats.null_frac, 0.5);
  EXPECT_THROW(analyze_column(values, 0, 0, 10), InvalidInput);
}

TEST(AnalyzeColumnTest, DefaultSampleCapScalesWithTarget) {
  std::vector<NullableScalar> values;
  for (int i = 0; i < 5000; ++i) values.emplace_back(i);
  EXPECT_EQ(analyze_column(values, 2, 3).row_count, 600u);
  EXPECT_EQ(analyze_column(values, 100, 3).row_count, 5000u);
}

TEST(AnalyzeColumnProperty, PartitionIsCompleteAndDeterministic) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> value(0, 60);
  std::uniform_int_distribution<int> null_roll(0, 9);
  std::uniform_int_distribution<std::size_t> size(1, 500);
  std::uniform_int_distribution<std::uint32_t> target(1, 40);
  for (int round = 0; round < 200; ++round) {
    std::vector<NullableScalar> values(size(rng));
    for (auto& v : values) {
      if (null_roll(rng) == 0) {
        v = std::nullopt;
      } else {
        v = value(rng);
      }
    }
    const auto t = target(rng);
    const auto seed = rng();
    const auto cap = size(rng);
    const auto a = analyze_column(values, t, seed, cap);
    const auto b = analyze_column(values, t, seed, cap);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a.row_count, std::min(cap, values.size()));
    if (a.null_frac < 1.0) {
      ASSERT_NEAR(partition_total(a), 1.0, 1e-12);
      ASSERT_TRUE(a.histogram || std::abs(a.mcv_fraction() - 1.0) < 1e-12);
    }

    const auto full = analyze_column(values, t, seed, values.size());
    const auto nulls = std::count(values.begin(), values.end(), std::nullopt);
    ASSERT_EQ(full.null_frac, static_cast<double>(nulls) / static_cast<double>(values.size()));
  }
}

TEST(StatsInterchangeTest, RoundTripsRunningExample) {
  const auto stats = analyze_column(nullable(testing::kR1X), 3, 1, 1000);
  const auto text = save_stats(stats);
  EXPECT_NE(text.find("\"bounds\""), std::string::npos);
  EXPECT_EQ(load_stats(text), stats);
}

TEST(StatsInterchangeTest, EncodesAbsentHistogramAsNull) {
  AttributeStats stats;
  stats.null_frac = 1.0;
  const auto text = save_stats(stats);
  EXPECT_NE(text.find("\"histogram\": null"), std::string::npos);
  EXPECT_EQ(load_stats(text), stats);
}

void expect_format_error(const std::string& document, const std::string& message) {
  try {
    load_stats(document);
    FAIL() << "expected FormatError: " << message;
  } catch (const FormatError& e) {
    EXPECT_EQ(std::string(e.what()), message);
  }
}

TEST(StatsInterchangeTest, ReportsOffendingField) {
  expect_format_error(
      R"({"null_frac":0,"mcv":{"values":[],"fractions":[]},"histogram":{},"row_count":1,"statistics_target":1})",
      "missing field bounds");
  expect_format_error(
      R"({"null_frac":0,"mcv":{"values":[],"fractions":[]},"histogram":{"bounds":[3,1,2]},"row_count":1,"statistics_target":1})",
      "bounds not sorted");
  expect_format_error(R"({"mcv":{"values":[],"fractions":[]},"histogram":null,"row_count":1,"statistics_target":1})",
                      "missing field null_frac");
  expect_format_error(
      R"({"null_frac":0,"mcv":{"values":[],"fractions":[]},"histogram":null,"row_count":-1,"statistics_target":1})",
      "field row_count is not a non-negative integer");
  EXPECT_THROW(load_stats("{not json"), FormatError);
}

TEST(StatsInterchangeProperty, RandomStatsRoundTripBitExactly) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> value(-1e9, 1e9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> count(0, 30);
  for (int round = 0; round < 100; ++round) {
    AttributeStats stats;
    stats.null_frac = unit(rng);
    std::vector<double> mcv_values(count(rng));
    for (auto& v : mcv_values) v = value(rng);
    std::sort(mcv_values.begin(), mcv_values.end());
    mcv_values.erase(std::unique(mcv_values.begin(), mcv_values.end()), mcv_values.end());
    std::vector<double> fractions;
    for (std::size_t i = 0; i < mcv_values.size(); ++i) fractions.push_back(unit(rng) / 40.0 + 1e-300);
    stats.mcv = MostCommonValues(mcv_values, fractions);
    if (round % 5 != 0) stats.histogram = EquiDepthHistogram(testing::random_bounds(rng));
    stats.row_count = rng() >> 20;
    stats.statistics_target = static_cast<std::uint32_t>(1 + rng() % 10000);

    const auto loaded = load_stats(save_stats(stats));
    ASSERT_EQ(loaded, stats);
    ASSERT_EQ(std::memcmp(&loaded.null_frac, &stats.null_frac, sizeof(double)), 0);
  }
}

}  // namespace
}  // namespace selest
