#pragma once

// Tabular output shared by the command line tool: CSV, JSON and aligned
// text rendering, plus JSON round-trips for the library's result types.

#include <map>
#include <string>
#include <vector>

#include "latcon/core.hpp"

namespace latcon {

/// Cells are stored as text so exact integers and rationals survive
/// serialization unchanged.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::string> notes;

  void add_row(std::vector<std::string> cells);
  friend bool operator==(const Table&, const Table&) = default;
};

enum class OutputFormat { Csv, Json, Pretty };

OutputFormat parse_format(const std::string& name);

/// Shortest decimal text that reads back as the same double.
std::string format_double(double x);

std::string render(const std::vector<Table>& tables, OutputFormat format);

std::string to_json(const std::vector<Table>& tables);
std::vector<Table> tables_from_json(const std::string& text);

std::string to_json(const SeriesTable& t);
SeriesTable series_from_json(const std::string& text);

std::string to_json(const EstimateReport& r);
EstimateReport estimate_from_json(const std::string& text);

bool operator==(const SeriesTable& a, const SeriesTable& b);
bool operator==(const EstimateReport& a, const EstimateReport& b);

/// Table view of a report: one row per raw term plus a summary row.
Table estimate_table(const std::string& title, const EstimateReport& r);

}  // namespace latcon
