#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "selest/column_io.hpp"
#include "selest/dataset.hpp"
#include "selest/error.hpp"
#include "selest/sweep.hpp"
#include "test_support.hpp"

namespace selest {
namespace {

std::string serialize(const Column& column) {
  std::ostringstream out;
  write_column(out, column);
  return out.str();
}

TEST(DatasetTest, SameSeedSameBytes) {
  for (const auto kind : {DatasetKind::kUniformInt, DatasetKind::kSkewedInt, DatasetKind::kRangesMixed}) {
    EXPECT_EQ(serialize(generate_dataset(kind, 2000, 9)), serialize(generate_dataset(kind, 2000, 9)));
    EXPECT_NE(serialize(generate_dataset(kind, 2000, 9)), serialize(generate_dataset(kind, 2000, 10)));
  }
}

TEST(DatasetTest, RunningExampleColumns) {
  EXPECT_EQ(std::get<ScalarColumn>(generate_dataset(DatasetKind::kRunningExampleR1, 0, 0)),
            testing::nullable(testing::kR1X));
  EXPECT_EQ(std::get<ScalarColumn>(generate_dataset(DatasetKind::kRunningExampleR2, 5, 3)),
            testing::nullable(testing::kR2Y));
}

TEST(DatasetTest, RejectsBadArguments) {
  EXPECT_THROW(generate_dataset(DatasetKind::kUniformInt, 0, 1), InvalidInput);
  EXPECT_THROW(generate_dataset(DatasetKind::kRangesMixed, 10, 1, RangeMix{0.6, 0.6, 0.0}), InvalidInput);
  EXPECT_THROW(parse_dataset_kind("normal"), InvalidInput);
  for (const auto kind : {DatasetKind::kUniformInt, DatasetKind::kSkewedInt, DatasetKind::kRangesMixed,
                          DatasetKind::kRunningExampleR1, DatasetKind::kRunningExampleR2}) {
    EXPECT_EQ(parse_dataset_kind(to_string(kind)), kind);
  }
}

TEST(DatasetTest, ScalarKindsStayInDomain) {
  for (const auto kind : {DatasetKind::kUniformInt, DatasetKind::kSkewedInt}) {
    for (const auto& v : std::get<ScalarColumn>(generate_dataset(kind, 5000, 4))) {
      ASSERT_TRUE(v);
      EXPECT_GE(*v, 0.0);
      EXPECT_LE(*v, kDatasetDomainMax);
      EXPECT_EQ(*v, std::floor(*v));
    }
  }
}

TEST(DatasetTest, RangeMixProportions) {
  const auto column = std::get<RangeColumn>(generate_dataset(DatasetKind::kRangesMixed, 100000, 5));
  std::size_t nulls = 0;
  std::size_t empties = 0;
  std::size_t infinite = 0;
  for (const auto& r : column) {
    if (!r) {
      ++nulls;
    } else if (r->empty) {
      ++empties;
    } else if (r->lower_infinite() || r->upper_infinite()) {
      ++infinite;
    }
  }
  EXPECT_NEAR(nulls / 1e5, 0.01, 0.003);
  EXPECT_NEAR(empties / 1e5, 0.01, 0.003);
  EXPECT_NEAR(infinite / 1e5, 0.01, 0.003);
}

TEST(ColumnIoTest, RoundTripsThroughFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "selest_harness_test";
  std::filesystem::create_directories(dir);
  const auto scalars = generate_dataset(DatasetKind::kSkewedInt, 500, 2);
  const auto ranges = generate_dataset(DatasetKind::kRangesMixed, 500, 2);
  write_column(dir / "s.txt", scalars);
  write_column(dir / "r.txt", ranges);
  EXPECT_EQ(read_column(dir / "s.txt"), scalars);
  EXPECT_EQ(read_column(dir / "r.txt"), ranges);
  std::filesystem::remove_all(dir);
}

TEST(ColumnIoTest, ErrorsCarryLineNumbers) {
  std::istringstream scalars("1\n2\nabc\n");
  try {
    parse_scalar_column(scalars, "x.txt");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("x.txt:3:"), std::string::npos) << e.what();
  }
  std::istringstream ranges("[1,2)\n\n[5,1]\n");
  try {
    parse_range_column(ranges, "r.txt");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("r.txt:3:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_column("/nonexistent/selest/column.txt"), FormatError);
}

TEST(ColumnIoTest, BlankLinesAreNulls) {
  std::istringstream in("1\n\n3\n");
  const auto column = parse_scalar_column(in, "t");
  ASSERT_EQ(column.size(), 3u);
  EXPECT_FALSE(column[1]);
}

TEST(SweepTest, ParsesTargets) {
  EXPECT_EQ(parse_targets("100:500:100"), (std::vector<std::uint32_t>{100, 200, 300, 400, 500}));
  EXPECT_EQ(parse_targets("5,1,20,5"), (std::vector<std::uint32_t>{1, 5, 20}));
  EXPECT_EQ(parse_targets("7"), (std::vector<std::uint32_t>{7}));
  for (const char* bad : {"", "0", "a:b:c", "10:1:1", "1:10:0", "1,,2", "-4"}) {
    EXPECT_THROW(parse_targets(bad), InvalidInput) << bad;
  }
}

TEST(SweepTest, CsvRoundTrip) {
  const std::vector<ExperimentRow> rows = {{1, 0.25, 0.5, 0.25, 1.5, 20.0}, {10, 1.0 / 3.0, 0.1, 0.2333, 0.02, 3e5}};
  std::stringstream io;
  write_sweep_csv(io, rows);
  EXPECT_EQ(io.str().substr(0, kSweepCsvHeader.size()), kSweepCsvHeader);
  EXPECT_EQ(read_sweep_csv(io), rows);
}

TEST(SweepTest, ScalarSweepRows) {
  const auto xs = std::get<ScalarColumn>(generate_dataset(DatasetKind::kSkewedInt, 3000, 1));
  const auto ys = std::get<ScalarColumn>(generate_dataset(DatasetKind::kUniformInt, 3000, 2));
  const std::vector<std::uint32_t> targets = {5, 10, 50};
  const auto rows = run_scalar_sweep(xs, ys, ScalarOp::kLt, targets, 1);
  ASSERT_EQ(rows.size(), targets.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].statistics_target, targets[i]);
    EXPECT_EQ(rows[i].exact, rows[0].exact);
    EXPECT_DOUBLE_EQ(rows[i].error, std::abs(rows[i].estimate - rows[i].exact));
    EXPECT_GT(rows[i].est_time_us, 0.0);
    EXPECT_GE(rows[i].build_time_us, 0.0);
  }
  EXPECT_LT(rows.back().error, 0.02);
}

TEST(SweepTest, RangeSweepRows) {
  const auto xs = std::get<RangeColumn>(generate_dataset(DatasetKind::kRangesMixed, 3000, 3));
  const auto ys = std::get<RangeColumn>(generate_dataset(DatasetKind::kRangesMixed, 3000, 4));
  const std::vector<std::uint32_t> targets = {10, 100};
  const auto left = run_range_sweep(xs, ys, RangeOp::kStrictlyLeft, targets, 1);
  const auto right = run_range_sweep(xs, ys, RangeOp::kStrictlyRight, targets, 1);
  const auto overlap = run_range_sweep(xs, ys, RangeOp::kOverlaps, targets, 1);
  ASSERT_EQ(left.size(), 2u);
  const auto usable = [](const RangeColumn& c) {
    return static_cast<double>(std::count_if(c.begin(), c.end(), [](const auto& r) { return r && !r->empty; }));
  };
  const double clean = usable(xs) * usable(ys) / static_cast<double>(xs.size() * ys.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    EXPECT_EQ(left[i].exact, left[0].exact);
    // Overlap, strictly-left and strictly-right partition the clean pairs exactly.
    EXPECT_NEAR(left[i].exact + right[i].exact + overlap[i].exact, clean, 1e-12);
    EXPECT_LT(left[i].error, 0.05);
  }
  EXPECT_THROW(run_range_sweep(xs, ys, RangeOp::kStrictlyLeft, std::vector<std::uint32_t>{}, 1), InvalidInput);
}

}  // namespace
}  // namespace selest
