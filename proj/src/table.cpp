#include "lamb/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include "json.hpp"
#include <stdexcept>

namespace lamb {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string format_number(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
  if (ec != std::errc{}) throw std::runtime_error("format_number: buffer too small");
  return std::string(buf, p);
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table::add_row: width mismatch");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].text.size());
  std::string out;
  const auto line = [&](const auto& get) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string& s = get(i);
      out += s;
      if (i + 1 < width.size()) out += std::string(width[i] - s.size() + 2, ' ');
    }
    out += '\n';
  };
  line([&](std::size_t i) -> const std::string& { return t.columns[i]; });
  std::string rule;
  for (std::size_t i = 0; i < width.size(); ++i) rule += std::string(width[i], '-') + (i + 1 < width.size() ? "  " : "");
  out += rule + '\n';
  for (const auto& r : t.rows) line([&](std::size_t i) -> const std::string& { return r[i].text; });
  return out;
}

}  // namespace

std::string render(const Table& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return render_text(t);
    case OutputFormat::Csv: {
      std::string out;
      for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_field(t.columns[i]);
      out += '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i].text);
        out += '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (r[i].number && std::isfinite(*r[i].number))
            obj[t.columns[i]] = *r[i].number;
          else if (r[i].number || r[i].text.empty())
            obj[t.columns[i]] = nullptr;
          else
            obj[t.columns[i]] = r[i].text;
        }
        arr.push_back(std::move(obj));
      }
      return arr.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace lamb
