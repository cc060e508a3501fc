#include "selest/ranges.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "selest/error.hpp"
#include "selest/format.hpp"
#include "selest/sampling.hpp"
#include "stats_json.hpp"

namespace selest {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RangeValue RangeValue::make(double lower, double upper, bool lower_closed, bool upper_closed) {
  if (std::isnan(lower) || std::isnan(upper)) throw InvalidInput("range bound is NaN");
  if (lower == kInf || upper == -kInf) throw InvalidInput("range bound infinite on the wrong side");
  if (lower > upper) throw InvalidInput("range lower bound above upper bound");
  if (lower == -kInf) lower_closed = false;
  if (upper == kInf) upper_closed = false;
  if (lower == upper && !(lower_closed && upper_closed)) return make_empty();
  return RangeValue{lower, upper, lower_closed, upper_closed, false};
}

NullableRange parse_range_literal(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text == "empty") return RangeValue::make_empty();

  const auto fail = [&]() { return FormatError("invalid range literal: " + std::string(text)); };
  if (text.size() < 3) throw fail();
  const char open = text.front();
  const char close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) throw fail();

  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) throw fail();

  const auto lower_text = trim(body.substr(0, comma));
  const auto upper_text = trim(body.substr(comma + 1));

  double lower = -kInf;
  if (!lower_text.empty() && lower_text != "-inf" && lower_text != "-infinity") {
    const auto parsed = parse_number(lower_text);
    if (!parsed || !std::isfinite(*parsed)) throw fail();
    lower = *parsed;
  }
  double upper = kInf;
  if (!upper_text.empty() && upper_text != "inf" && upper_text != "+inf" && upper_text != "infinity") {
    const auto parsed = parse_number(upper_text);
    if (!parsed || !std::isfinite(*parsed)) throw fail();
    upper = *parsed;
  }

  try {
    return RangeValue::make(lower, upper, open == '[', close == ']');
  } catch (const InvalidInput&) {
    throw fail();
  }
}

std::string format_range_literal(const NullableRange& range) {
  if (!range) return "";
  if (range->empty) return "empty";
  std::string out;
  out += range->lower_closed ? '[' : '(';
  out += range->lower_infinite() ? "-inf" : format_number(range->lower);
  out += ',';
  out += range->upper_infinite() ? "inf" : format_number(range->upper);
  out += range->upper_closed ? ']' : ')';
  return out;
}

std::string_view to_string(RangeOp op) {
  switch (op) {
    case RangeOp::kStrictlyLeft:
      return "strictly-left";
    case RangeOp::kStrictlyRight:
      return "strictly-right";
    case RangeOp::kNoExtendRight:
      return "no-extend-right";
    case RangeOp::kNoExtendLeft:
      return "no-extend-left";
    case RangeOp::kOverlaps:
      return "overlaps";
  }
  return "?";
}

RangeOp parse_range_op(std::string_view name) {
  if (name == "strictly-left" || name == "<<") return RangeOp::kStrictlyLeft;
  if (name == "strictly-right" || name == ">>") return RangeOp::kStrictlyRight;
  if (name == "no-extend-right" || name == "&<") return RangeOp::kNoExtendRight;
  if (name == "no-extend-left" || name == "&>") return RangeOp::kNoExtendLeft;
  if (name == "overlaps" || name == "&&") return RangeOp::kOverlaps;
  throw UnsupportedOperator(std::string(name));
}

bool satisfies(const RangeValue& x, const RangeValue& y, RangeOp op) {
  if (x.empty || y.empty) return false;
  switch (op) {
    case RangeOp::kStrictlyLeft:
      if (x.upper_infinite() || y.lower_infinite()) return false;
      if (x.upper != y.lower) return x.upper < y.lower;
      return !(x.upper_closed && y.lower_closed);
    case RangeOp::kStrictlyRight:
      return satisfies(y, x, RangeOp::kStrictlyLeft);
    case RangeOp::kNoExtendRight:
      if (y.upper_infinite()) return true;
      if (x.upper_infinite()) return false;
      if (x.upper != y.upper) return x.upper < y.upper;
      return !x.upper_closed || y.upper_closed;
    case RangeOp::kNoExtendLeft:
      if (y.lower_infinite()) return true;
      if (x.lower_infinite()) return false;
      if (x.lower != y.lower) return x.lower > y.lower;
      return !x.lower_closed || y.lower_closed;
    case RangeOp::kOverlaps:
      return !satisfies(x, y, RangeOp::kStrictlyLeft) && !satisfies(y, x, RangeOp::kStrictlyLeft);
  }
  return false;
}

BoundEdge lower_edge(const RangeValue& r) {
  if (r.lower_infinite()) return {r.lower, 0};
  return {r.lower, r.lower_closed ? -1 : 1};
}

BoundEdge upper_edge(const RangeValue& r) {
  if (r.upper_infinite()) return {r.upper, 0};
  return {r.upper, r.upper_closed ? 1 : -1};
}

RangeStats analyze_range_column(std::span<const NullableRange> values, std::uint32_t statistics_target,
                                std::uint64_t sample_seed, std::size_t sample_cap) {
  if (statistics_target < 1) throw InvalidInput("invalid statistics target");
  if (sample_cap < 1) throw InvalidInput("invalid sample cap");

  RangeStats stats;
  stats.statistics_target = statistics_target;
  const auto rows = sample_rows(values.size(), sample_cap, sample_seed);
  stats.row_count = rows.size();
  if (rows.empty()) return stats;

  std::size_t nulls = 0;
  std::size_t empties = 0;
  std::size_t lower_inf = 0;
  std::size_t upper_inf = 0;
  std::vector<NullableScalar> lowers;
  std::vector<NullableScalar> uppers;
  for (const auto row : rows) {
    const auto& value = values[row];
    if (!value) {
      ++nulls;
    } else if (value->empty) {
      ++empties;
    } else {
      if (value->lower_infinite()) {
        ++lower_inf;
      } else {
        lowers.emplace_back(value->lower);
      }
      if (value->upper_infinite()) {
        ++upper_inf;
      } else {
        uppers.emplace_back(value->upper);
      }
    }
  }

  const auto sampled = static_cast<double>(rows.size());
  const std::size_t non_null = rows.size() - nulls;
  const std::size_t non_empty = non_null - empties;
  stats.null_frac = static_cast<double>(nulls) / sampled;
  stats.empty_frac = non_null == 0 ? 0.0 : static_cast<double>(empties) / static_cast<double>(non_null);
  if (non_empty > 0) {
    stats.lower_inf_frac = static_cast<double>(lower_inf) / static_cast<double>(non_empty);
    stats.upper_inf_frac = static_cast<double>(upper_inf) / static_cast<double>(non_empty);
  }
  // The bounds already come from the sample, so analyze them in full.
  if (!lowers.empty()) stats.lower_stats = analyze_column(lowers, statistics_target, sample_seed, lowers.size());
  if (!uppers.empty()) stats.upper_stats = analyze_column(uppers, statistics_target, sample_seed, uppers.size());
  return stats;
}

std::string save_range_stats(const RangeStats& stats) {
  nlohmann::json doc;
  doc["kind"] = "range";
  doc["null_frac"] = stats.null_frac;
  doc["empty_frac"] = stats.empty_frac;
  doc["lower_inf_frac"] = stats.lower_inf_frac;
  doc["upper_inf_frac"] = stats.upper_inf_frac;
  doc["lower"] = stats.lower_stats ? detail::stats_to_json(*stats.lower_stats) : nlohmann::json(nullptr);
  doc["upper"] = stats.upper_stats ? detail::stats_to_json(*stats.upper_stats) : nlohmann::json(nullptr);
  doc["row_count"] = stats.row_count;
  doc["statistics_target"] = stats.statistics_target;
  return doc.dump(2) + "\n";
}

RangeStats load_range_stats(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed stats document: ") + e.what());
  }
  const auto& kind = detail::require_field(doc, "kind");
  if (kind != "range") throw FormatError("field kind is not \"range\"");

  RangeStats stats;
  stats.null_frac = detail::require_fraction(doc, "null_frac");
  stats.empty_frac = detail::require_fraction(doc, "empty_frac");
  stats.lower_inf_frac = detail::require_fraction(doc, "lower_inf_frac");
  stats.upper_inf_frac = detail::require_fraction(doc, "upper_inf_frac");
  if (const auto& lower = detail::require_field(doc, "lower"); !lower.is_null()) {
    stats.lower_stats = detail::stats_from_json(lower);
  }
  if (const auto& upper = detail::require_field(doc, "upper"); !upper.is_null()) {
    stats.upper_stats = detail::stats_from_json(upper);
  }
  const auto& rows = detail::require_field(doc, "row_count");
  if (!rows.is_number_unsigned()) throw FormatError("field row_count is not a non-negative integer");
  stats.row_count = rows.get<std::uint64_t>();
  const auto& target = detail::require_field(doc, "statistics_target");
  if (!target.is_number_unsigned() || target.get<std::uint64_t>() < 1 || target.get<std::uint64_t>() > UINT32_MAX) {
    throw FormatError("field statistics_target out of range");
  }
  stats.statistics_target = target.get<std::uint32_t>();
  return stats;
}

AnyStats load_any_stats(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed stats document: ") + e.what());
  }
  if (doc.is_object() && doc.contains("kind")) return load_range_stats(document);
  return detail::stats_from_json(doc);
}

namespace {

// P(a < b) for the finite shares of two bound columns. Zero when either share is empty.
double finite_lt(const std::optional<AttributeStats>& a, double a_finite, const std::optional<AttributeStats>& b,
                 double b_finite) {
  if (a_finite <= 0.0 || b_finite <= 0.0) return 0.0;
  if (!a || !b) throw InsufficientStatistics();
  return join_selectivity(*a, *b, ScalarOp::kLt).value();
}

// Each function below is conditional on both sides being non-null and non-empty.

double clean_strictly_left(const RangeStats& x, const RangeStats& y) {
  // Rows with X.upper = +inf or Y.lower = -inf never qualify.
  const double x_finite = 1.0 - x.upper_inf_frac;
  const double y_finite = 1.0 - y.lower_inf_frac;
  return x_finite * y_finite * finite_lt(x.upper_stats, x_finite, y.lower_stats, y_finite);
}

double clean_no_extend_right(const RangeStats& x, const RangeStats& y) {
  // Y.upper = +inf admits everything; X.upper = +inf is admitted only by Y.upper = +inf.
  const double x_finite = 1.0 - x.upper_inf_frac;
  const double y_finite = 1.0 - y.upper_inf_frac;
  return x_finite * (y.upper_inf_frac + y_finite * finite_lt(x.upper_stats, x_finite, y.upper_stats, y_finite)) +
         x.upper_inf_frac * y.upper_inf_frac;
}

double clean_lower_lt(const RangeStats& x, const RangeStats& y) {
  // X.lower = -inf is below every finite Y.lower; Y.lower = -inf has nothing below it.
  const double x_finite = 1.0 - x.lower_inf_frac;
  const double y_finite = 1.0 - y.lower_inf_frac;
  return y_finite * (x.lower_inf_frac + x_finite * finite_lt(x.lower_stats, x_finite, y.lower_stats, y_finite));
}

}  // namespace

Selectivity range_join_selectivity(const RangeStats& sx, const RangeStats& sy, RangeOp op,
                                   NoExtendLeftReading reading) {
  if (op == RangeOp::kStrictlyRight) return range_join_selectivity(sy, sx, RangeOp::kStrictlyLeft, reading);

  const double clean = (1.0 - sx.null_frac) * (1.0 - sx.empty_frac) * (1.0 - sy.null_frac) * (1.0 - sy.empty_frac);
  if (clean <= 0.0) return Selectivity(0.0);

  double conditional = 0.0;
  switch (op) {
    case RangeOp::kStrictlyLeft:
      conditional = clean_strictly_left(sx, sy);
      break;
    case RangeOp::kNoExtendRight:
      conditional = clean_no_extend_right(sx, sy);
      break;
    case RangeOp::kNoExtendLeft:
      conditional = reading == NoExtendLeftReading::kPrinted ? clean_lower_lt(sx, sy) : 1.0 - clean_lower_lt(sx, sy);
      break;
    case RangeOp::kOverlaps:
      conditional = 1.0 - clean_strictly_left(sx, sy) - clean_strictly_left(sy, sx);
      break;
    case RangeOp::kStrictlyRight:
      break;
  }
  return Selectivity(clean * std::clamp(conditional, 0.0, 1.0));
}

}  // namespace selest
