#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace selest {

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

/// Parses a complete decimal number (surrounding blanks allowed). nullopt on anything else.
std::optional<double> parse_number(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace selest
