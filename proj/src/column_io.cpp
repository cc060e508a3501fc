#include "selest/column_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "selest/error.hpp"
#include "selest/format.hpp"

namespace selest {

namespace {

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

bool is_range_line(std::string_view line) {
  line = trim(line);
  return !line.empty() && (line.front() == '[' || line.front() == '(' || line == "empty");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  return in;
}

}  // namespace

ScalarColumn parse_scalar_column(std::istream& in, std::string_view source) {
  ScalarColumn column;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto text = trim(line);
    if (text.empty()) {
      column.emplace_back(std::nullopt);
      continue;
    }
    const auto value = parse_number(text);
    if (!value || !std::isfinite(*value)) {
      throw FormatError(location(source, number) + "not a finite number: " + std::string(text));
    }
    column.emplace_back(*value);
  }
  return column;
}

RangeColumn parse_range_column(std::istream& in, std::string_view source) {
  RangeColumn column;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    try {
      column.push_back(parse_range_literal(line));
    } catch (const FormatError& e) {
      throw FormatError(location(source, number) + e.what());
    }
  }
  return column;
}

Column read_column(const std::filesystem::path& path) {
  bool ranges = false;
  {
    auto probe = open_input(path);
    std::string line;
    while (std::getline(probe, line)) {
      if (trim(line).empty()) continue;
      ranges = is_range_line(line);
      break;
    }
  }
  auto in = open_input(path);
  const auto source = path.string();
  if (ranges) return parse_range_column(in, source);
  return parse_scalar_column(in, source);
}

void write_column(std::ostream& out, const Column& column) {
  if (const auto* scalars = std::get_if<ScalarColumn>(&column)) {
    for (const auto& v : *scalars) {
      if (v) out << format_number(*v);
      out << '\n';
    }
  } else {
    for (const auto& r : std::get<RangeColumn>(column)) out << format_range_literal(r) << '\n';
  }
}

void write_column(const std::filesystem::path& path, const Column& column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string() + ": cannot open file for writing");
  write_column(out, column);
  if (!out) throw FormatError(path.string() + ": write failed");
}

}  // namespace selest
