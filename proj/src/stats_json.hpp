#pragma once

#include <string_view>

#include <json.hpp>

#include "selest/stats.hpp"

namespace selest::detail {

nlohmann::json stats_to_json(const AttributeStats& stats);
AttributeStats stats_from_json(const nlohmann::json& doc);

// Field accessors that raise FormatError("missing field <name>") and friends.
const nlohmann::json& require_field(const nlohmann::json& obj, std::string_view name);
double require_number(const nlohmann::json& obj, std::string_view name);
double require_fraction(const nlohmann::json& obj, std::string_view name);

}  // namespace selest::detail
