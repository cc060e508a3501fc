#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "selest/error.hpp"
#include "selest/histogram.hpp"
#include "test_support.hpp"

namespace selest {
namespace {

using testing::kHistX;
using testing::kR1X;

TEST(EquiDepthHistogramTest, BuildsRunningExampleHistograms) {
  EXPECT_EQ(build_equi_depth(kR1X, 3).bounds().size(), 4u);
  EXPECT_EQ(build_equi_depth(kR1X, 3), EquiDepthHistogram(kHistX));
  EXPECT_EQ(build_equi_depth(testing::kR2Y, 3), EquiDepthHistogram(testing::kHistY));
}

TEST(EquiDepthHistogramTest, BuildsDegenerateAndSmallHistograms) {
  EXPECT_EQ(build_equi_depth(std::vector<double>{5}, 1), EquiDepthHistogram({5, 5}));

  // sorted {1,2,3,4}: bounds at indices 0, floor(3/2) = 1, 3. Each bin ]b_j, b_j+1] then holds 2 of the 4 values
  // when the first bin is closed on the left.
  const auto h = build_equi_depth(std::vector<double>{4, 3, 2, 1}, 2);
  EXPECT_EQ(h, EquiDepthHistogram({1, 2, 4}));
}

TEST(EquiDepthHistogramTest, RejectsBadInput) {
  EXPECT_THROW(build_equi_depth(std::vector<double>{}, 3), InvalidInput);
  EXPECT_THROW(build_equi_depth(std::vector<double>{1, 2}, 0), InvalidInput);
  EXPECT_THROW(EquiDepthHistogram({3, 1}), InvalidInput);
  EXPECT_THROW(EquiDepthHistogram({1}), InvalidInput);
  try {
    build_equi_depth(std::vector<double>{}, 1);
  } catch (const InvalidInput& e) {
    EXPECT_STREQ(e.what(), "no data");
  }
  try {
    build_equi_depth(std::vector<double>{1}, 0);
  } catch (const InvalidInput& e) {
    EXPECT_STREQ(e.what(), "invalid bin count");
  }
}

TEST(EquiDepthHistogramTest, CdfOnRunningExample) {
  const EquiDepthHistogram h(kHistX);
  EXPECT_DOUBLE_EQ(h.cdf(30), 0.75);
  EXPECT_EQ(h.cdf(5), 0.0);
  EXPECT_EQ(h.cdf(50), 1.0);
  EXPECT_NEAR(h.cdf(22), 7.0 / 15.0, 1e-15);
  EXPECT_EQ(h.cdf(10), 0.0);
  EXPECT_EQ(h.cdf(45), 1.0);
}

TEST(EquiDepthHistogramTest, PdfOnRunningExample) {
  const EquiDepthHistogram h(kHistX);
  EXPECT_NEAR(h.pdf(22), 1.0 / 15.0, 1e-15);
  EXPECT_EQ(h.pdf(9), 0.0);
  EXPECT_NEAR(h.pdf(30), 1.0 / 60.0, 1e-15);
  EXPECT_NEAR(h.pdf(10), 1.0 / 30.0, 1e-15);
  EXPECT_EQ(h.pdf(45), 0.0);
}

TEST(EquiDepthHistogramTest, ZeroWidthBinsStepTheCdf) {
  const EquiDepthHistogram h({0, 5, 5, 10});
  EXPECT_NEAR(h.cdf_left(5), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(h.cdf(5), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(h.cdf(7.5), 2.0 / 3.0 + 1.0 / 6.0, 1e-15);
  EXPECT_TRUE(std::isfinite(h.pdf(5)));

  const EquiDepthHistogram point({5, 5});
  EXPECT_EQ(point.cdf(4.999), 0.0);
  EXPECT_EQ(point.cdf(5), 1.0);
  EXPECT_EQ(point.cdf_left(5), 0.0);
  EXPECT_EQ(point.pdf(5), 0.0);
}

TEST(EquiDepthHistogramProperty, CdfIsMonotoneAndNormalized) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const EquiDepthHistogram h(testing::random_bounds(rng, 50, 0.15));
    std::vector<double> probes;
    std::uniform_real_distribution<double> probe(h.min() - 10, h.max() + 10);
    for (int i = 0; i < 50; ++i) probes.push_back(probe(rng));
    probes.insert(probes.end(), h.bounds().begin(), h.bounds().end());
    std::sort(probes.begin(), probes.end());
    for (std::size_t i = 1; i < probes.size(); ++i) {
      ASSERT_LE(h.cdf(probes[i - 1]), h.cdf(probes[i]));
      ASSERT_LE(h.cdf_left(probes[i]), h.cdf(probes[i]));
    }
    ASSERT_EQ(h.cdf(h.max()), 1.0);
    ASSERT_EQ(h.cdf_left(h.min()), 0.0);
  }
}

TEST(EquiDepthHistogramProperty, BinMassesAndDensityIntegrate) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 300; ++round) {
    const EquiDepthHistogram h(testing::random_bounds(rng, 50, 0.0));
    const auto b = h.bounds();
    const double bins = static_cast<double>(h.bin_count());
    ASSERT_EQ(h.cdf(b.front()), 0.0);
    double integral = 0.0;
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      ASSERT_NEAR(h.cdf(b[j + 1]) - h.cdf(b[j]), 1.0 / bins, 1e-12);
      const double mid = 0.5 * (b[j] + b[j + 1]);
      integral += h.pdf(mid) * (b[j + 1] - b[j]);

      // Three collinear probes inside the bin.
      const double p0 = b[j] + 0.2 * (b[j + 1] - b[j]);
      const double p1 = b[j] + 0.5 * (b[j + 1] - b[j]);
      const double p2 = b[j] + 0.8 * (b[j + 1] - b[j]);
      ASSERT_NEAR(h.cdf(p1) - h.cdf(p0), (h.cdf(p2) - h.cdf(p0)) * ((p1 - p0) / (p2 - p0)), 1e-12);
    }
    ASSERT_NEAR(integral, 1.0, 1e-12);
  }
}

TEST(EquiDepthHistogramProperty, BuiltBinsHoldEqualShares) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> value(-1000, 1000);
  std::uniform_int_distribution<std::size_t> size(2, 400);
  for (int round = 0; round < 200; ++round) {
    std::vector<double> data(size(rng));
    for (auto& v : data) v = value(rng);
    std::uniform_int_distribution<std::size_t> bins_dist(1, data.size() - 1);
    const auto bins = bins_dist(rng);
    const auto h = build_equi_depth(data, bins);
    const auto b = h.bounds();
    ASSERT_EQ(b.front(), *std::min_element(data.begin(), data.end()));
    ASSERT_EQ(b.back(), *std::max_element(data.begin(), data.end()));

    const double expected = static_cast<double>(data.size()) / static_cast<double>(bins);
    for (std::size_t j = 0; j < bins; ++j) {
      const auto in_bin = std::count_if(data.begin(), data.end(), [&](double v) {
        return (j == 0 ? v >= b[j] : v > b[j]) && v <= b[j + 1];
      });
      ASSERT_LE(std::abs(static_cast<double>(in_bin) - expected), 1.0 + 1e-9) << "bin " << j << " of " << bins;
    }
  }
}

}  // namespace
}  // namespace selest
