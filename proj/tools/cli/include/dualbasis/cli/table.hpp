#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualbasis/cli/run_config.hpp"

namespace dualbasis::cli {

/// Rendered text plus the typed value kept for JSON output.
struct Cell {
  std::string text;
  nlohmann::json value;
};

Cell text_cell(std::string s);
Cell int_cell(long long v);
Cell fixed_cell(double v, int digits = 10);
Cell sci_cell(double v, int digits = 2);
Cell general_cell(double v, int digits = 12);

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

void render_markdown(std::ostream& os, const Table& t);
void render_csv(std::ostream& os, const Table& t);
nlohmann::json to_json(const Table& t);

/// Markdown and CSV tables are written one after another; JSON becomes
/// {"tables": [...]}.
void render_tables(std::ostream& os, const std::vector<Table>& tables, Format format);

std::string csv_escape(const std::string& s);
std::string format_double(double v, char style, int digits);

}  // namespace dualbasis::cli
