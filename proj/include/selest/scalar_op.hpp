#pragma once

#include <string>
#include <string_view>

namespace selest {

/// Binary predicates over a totally ordered scalar domain. kEq is only used for MCV matching.
enum class ScalarOp { kLt, kLe, kGt, kGe, kEq };

constexpr bool evaluate(ScalarOp op, double lhs, double rhs) {
  switch (op) {
    case ScalarOp::kLt:
      return lhs < rhs;
    case ScalarOp::kLe:
      return lhs <= rhs;
    case ScalarOp::kGt:
      return lhs > rhs;
    case ScalarOp::kGe:
      return lhs >= rhs;
    case ScalarOp::kEq:
      return lhs == rhs;
  }
  return false;
}

/// Spelling used on the command line: lt, le, gt, ge, eq.
std::string_view to_string(ScalarOp op);

/// Throws UnsupportedOperator for anything that is not a scalar operator name.
ScalarOp parse_scalar_op(std::string_view name);

}  // namespace selest
