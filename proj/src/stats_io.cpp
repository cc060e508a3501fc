#include <string>
#include <utility>
#include <vector>

#include "selest/error.hpp"
#include "selest/stats.hpp"
#include "stats_json.hpp"

namespace selest {
namespace detail {

using nlohmann::json;

const json& require_field(const json& obj, std::string_view name) {
  if (!obj.is_object()) throw FormatError("expected object holding field " + std::string(name));
  const auto it = obj.find(name);
  if (it == obj.end()) throw FormatError("missing field " + std::string(name));
  return *it;
}

double require_number(const json& obj, std::string_view name) {
  const auto& field = require_field(obj, name);
  if (!field.is_number()) throw FormatError("field " + std::string(name) + " is not a number");
  return field.get<double>();
}

double require_fraction(const json& obj, std::string_view name) {
  const double value = require_number(obj, name);
  if (!(value >= 0.0 && value <= 1.0)) throw FormatError("field " + std::string(name) + " outside [0,1]");
  return value;
}

namespace {

std::uint64_t require_unsigned(const json& obj, std::string_view name) {
  const auto& field = require_field(obj, name);
  if (!field.is_number_unsigned()) {
    throw FormatError("field " + std::string(name) + " is not a non-negative integer");
  }
  return field.get<std::uint64_t>();
}

std::vector<double> require_number_array(const json& obj, std::string_view name) {
  const auto& field = require_field(obj, name);
  if (!field.is_array()) throw FormatError("field " + std::string(name) + " is not an array");
  std::vector<double> out;
  out.reserve(field.size());
  for (const auto& item : field) {
    if (!item.is_number()) throw FormatError("field " + std::string(name) + " holds a non-number");
    out.push_back(item.get<double>());
  }
  return out;
}

}  // namespace

json stats_to_json(const AttributeStats& stats) {
  json doc;
  doc["null_frac"] = stats.null_frac;
  doc["mcv"] = {{"values", std::vector<double>(stats.mcv.values().begin(), stats.mcv.values().end())},
                {"fractions", std::vector<double>(stats.mcv.fractions().begin(), stats.mcv.fractions().end())}};
  if (stats.histogram) {
    doc["histogram"] = {
        {"bounds", std::vector<double>(stats.histogram->bounds().begin(), stats.histogram->bounds().end())}};
  } else {
    doc["histogram"] = nullptr;
  }
  doc["row_count"] = stats.row_count;
  doc["statistics_target"] = stats.statistics_target;
  return doc;
}

AttributeStats stats_from_json(const json& doc) {
  AttributeStats stats;
  stats.null_frac = require_fraction(doc, "null_frac");

  const auto& mcv = require_field(doc, "mcv");
  try {
    stats.mcv = MostCommonValues(require_number_array(mcv, "values"), require_number_array(mcv, "fractions"));
  } catch (const InvalidInput& e) {
    throw FormatError(e.what());
  }

  const auto& histogram = require_field(doc, "histogram");
  if (!histogram.is_null()) {
    try {
      stats.histogram.emplace(require_number_array(histogram, "bounds"));
    } catch (const InvalidInput& e) {
      throw FormatError(e.what());
    }
  }

  stats.row_count = require_unsigned(doc, "row_count");
  const auto target = require_unsigned(doc, "statistics_target");
  if (target < 1 || target > UINT32_MAX) throw FormatError("field statistics_target out of range");
  stats.statistics_target = static_cast<std::uint32_t>(target);
  return stats;
}

}  // namespace detail

std::string save_stats(const AttributeStats& stats) { return detail::stats_to_json(stats).dump(2) + "\n"; }

AttributeStats load_stats(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed stats document: ") + e.what());
  }
  return detail::stats_from_json(doc);
}

}  // namespace selest
