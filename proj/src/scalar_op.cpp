#include "selest/scalar_op.hpp"

#include <string>

#include "selest/error.hpp"

namespace selest {

std::string_view to_string(ScalarOp op) {
  switch (op) {
    case ScalarOp::kLt:
      return "lt";
    case ScalarOp::kLe:
      return "le";
    case ScalarOp::kGt:
      return "gt";
    case ScalarOp::kGe:
      return "ge";
    case ScalarOp::kEq:
      return "eq";
  }
  return "?";
}

ScalarOp parse_scalar_op(std::string_view name) {
  if (name == "lt") return ScalarOp::kLt;
  if (name == "le") return ScalarOp::kLe;
  if (name == "gt") return ScalarOp::kGt;
  if (name == "ge") return ScalarOp::kGe;
  if (name == "eq") return ScalarOp::kEq;
  throw UnsupportedOperator(std::string(name));
}

}  // namespace selest
