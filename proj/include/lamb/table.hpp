#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lamb {

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Shortest locale-independent rendering with at most `significant` digits.
std::string format_number(double v, int significant = 12);

struct Cell {
  std::string text;
  std::optional<double> number;  // emitted as a JSON number when set

  static Cell str(std::string s) { return {std::move(s), std::nullopt}; }
  static Cell num(double v, int significant = 12) { return {format_number(v, significant), v}; }
  static Cell none() { return {"", std::nullopt}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void add_row(std::vector<Cell> row);
};

/// Table: aligned text columns. Csv: header + one record per row, RFC 4180
/// quoting. Json: array of objects keyed by column name; empty cells are null.
std::string render(const Table& t, OutputFormat format);

}  // namespace lamb
