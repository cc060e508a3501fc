#include "selest/oracle.hpp"

#include <algorithm>
#include <vector>

#include "selest/error.hpp"

namespace selest {

namespace {

std::vector<double> non_null_sorted(std::span<const NullableScalar> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (v) out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RangeValue> clean_ranges(std::span<const NullableRange> values) {
  std::vector<RangeValue> out;
  for (const auto& v : values) {
    if (v && !v->empty) out.push_back(*v);
  }
  return out;
}

template <typename EdgeOf>
std::vector<BoundEdge> sorted_edges(const std::vector<RangeValue>& ranges, EdgeOf edge_of) {
  std::vector<BoundEdge> edges;
  edges.reserve(ranges.size());
  for (const auto& r : ranges) edges.push_back(edge_of(r));
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Number of (x, y) with upper_edge(x) <= lower_edge(y).
std::uint64_t count_strictly_left(const std::vector<RangeValue>& xs, const std::vector<RangeValue>& ys) {
  const auto y_lower = sorted_edges(ys, lower_edge);
  std::uint64_t count = 0;
  for (const auto& x : xs) {
    count += static_cast<std::uint64_t>(y_lower.end() - std::lower_bound(y_lower.begin(), y_lower.end(), upper_edge(x)));
  }
  return count;
}

}  // namespace

ExactCount exact_restriction(std::span<const NullableScalar> values, double c, ScalarOp op) {
  if (values.empty()) throw InvalidInput("no data");
  ExactCount result{.qualifying = 0, .total = values.size()};
  for (const auto& v : values) {
    if (v && evaluate(op, *v, c)) ++result.qualifying;
  }
  return result;
}

ExactCount exact_join(std::span<const NullableScalar> xs, std::span<const NullableScalar> ys, ScalarOp op) {
  if (xs.empty() || ys.empty()) throw InvalidInput("no data");
  const auto sorted_y = non_null_sorted(ys);
  const auto m = static_cast<std::uint64_t>(sorted_y.size());

  ExactCount result{.qualifying = 0, .total = static_cast<std::uint64_t>(xs.size()) * ys.size()};
  for (const auto& x : xs) {
    if (!x) continue;
    const auto below = static_cast<std::uint64_t>(std::lower_bound(sorted_y.begin(), sorted_y.end(), *x) - sorted_y.begin());
    const auto at_or_below =
        static_cast<std::uint64_t>(std::upper_bound(sorted_y.begin(), sorted_y.end(), *x) - sorted_y.begin());
    switch (op) {
      case ScalarOp::kLt:
        result.qualifying += m - at_or_below;
        break;
      case ScalarOp::kLe:
        result.qualifying += m - below;
        break;
      case ScalarOp::kGt:
        result.qualifying += below;
        break;
      case ScalarOp::kGe:
        result.qualifying += at_or_below;
        break;
      case ScalarOp::kEq:
        result.qualifying += at_or_below - below;
        break;
    }
  }
  return result;
}

ExactCount exact_range_join(std::span<const NullableRange> xs, std::span<const NullableRange> ys, RangeOp op) {
  if (xs.empty() || ys.empty()) throw InvalidInput("no data");
  const auto clean_x = clean_ranges(xs);
  const auto clean_y = clean_ranges(ys);

  ExactCount result{.qualifying = 0, .total = static_cast<std::uint64_t>(xs.size()) * ys.size()};
  switch (op) {
    case RangeOp::kStrictlyLeft:
      result.qualifying = count_strictly_left(clean_x, clean_y);
      break;
    case RangeOp::kStrictlyRight:
      result.qualifying = count_strictly_left(clean_y, clean_x);
      break;
    case RangeOp::kNoExtendRight: {
      const auto y_upper = sorted_edges(clean_y, upper_edge);
      for (const auto& x : clean_x) {
        result.qualifying += static_cast<std::uint64_t>(
            y_upper.end() - std::lower_bound(y_upper.begin(), y_upper.end(), upper_edge(x)));
      }
      break;
    }
    case RangeOp::kNoExtendLeft: {
      const auto y_lower = sorted_edges(clean_y, lower_edge);
      for (const auto& x : clean_x) {
        result.qualifying += static_cast<std::uint64_t>(
            std::upper_bound(y_lower.begin(), y_lower.end(), lower_edge(x)) - y_lower.begin());
      }
      break;
    }
    case RangeOp::kOverlaps:
      // Non-empty ranges are either strictly left, strictly right or overlapping, never two of these.
      result.qualifying = static_cast<std::uint64_t>(clean_x.size()) * clean_y.size() -
                          count_strictly_left(clean_x, clean_y) - count_strictly_left(clean_y, clean_x);
      break;
  }
  return result;
}

}  // namespace selest
