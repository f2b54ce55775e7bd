#include "dualbasis/cli/table.hpp"

#include <cmath>
#include <cstdio>

namespace dualbasis::cli {

std::string format_double(double v, char style, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char fmt[8];
  std::snprintf(fmt, sizeof fmt, "%%.%d%c", digits, style);
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  std::string out = buf;
  // "-0.0000000000" reads as a sign error in a table
  if (out.front() == '-' && out.find_first_not_of("-0.e+") == std::string::npos) out.erase(0, 1);
  return out;
}

Cell text_cell(std::string s) {
  nlohmann::json v = s;
  return {std::move(s), std::move(v)};
}
Cell int_cell(long long v) { return {std::to_string(v), v}; }
Cell fixed_cell(double v, int digits) { return {format_double(v, 'f', digits), v}; }
Cell sci_cell(double v, int digits) { return {format_double(v, 'e', digits), v}; }
Cell general_cell(double v, int digits) { return {format_double(v, 'g', digits), v}; }

namespace {

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void render_markdown(std::ostream& os, const Table& t) {
  if (!t.title.empty()) os << "### " << t.title << "\n\n";
  os << '|';
  for (const auto& h : t.headers) os << ' ' << md_escape(h) << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.headers.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : t.rows) {
    os << '|';
    for (const auto& c : row) os << ' ' << md_escape(c.text) << " |";
    os << '\n';
  }
  os << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void render_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_escape(t.headers[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i].text);
    os << '\n';
  }
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.headers.size(); ++i) obj[t.headers[i]] = row[i].value;
    rows.push_back(std::move(obj));
  }
  return {{"title", t.title}, {"rows", std::move(rows)}};
}

void render_tables(std::ostream& os, const std::vector<Table>& tables, Format format) {
  switch (format) {
    case Format::markdown:
      for (const auto& t : tables) render_markdown(os, t);
      break;
    case Format::csv:
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) os << '\n';
        os << "# " << tables[i].title << '\n';
        render_csv(os, tables[i]);
      }
      break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : tables) arr.push_back(to_json(t));
      os << nlohmann::json{{"tables", std::move(arr)}}.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace dualbasis::cli
