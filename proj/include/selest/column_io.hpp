#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <variant>
#include <vector>

#include "selest/ranges.hpp"
#include "selest/stats.hpp"

namespace selest {

using ScalarColumn = std::vector<NullableScalar>;
using RangeColumn = std::vector<NullableRange>;
using Column = std::variant<ScalarColumn, RangeColumn>;

/// Column files hold one value per line; an empty line is null. Scalar files hold decimal numbers, range files
/// range literals. Parse errors are FormatErrors of the form "<source>:<line>: <reason>".
ScalarColumn parse_scalar_column(std::istream& in, std::string_view source);
RangeColumn parse_range_column(std::istream& in, std::string_view source);

/// Range file if the first non-blank line is a range literal ("[", "(" or "empty"), scalar otherwise.
Column read_column(const std::filesystem::path& path);

void write_column(std::ostream& out, const Column& column);
void write_column(const std::filesystem::path& path, const Column& column);

}  // namespace selest
