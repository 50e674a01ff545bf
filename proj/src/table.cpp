#include "latcon/table.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace latcon {

using nlohmann::json;

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size())
    throw DomainError("table '" + title + "': row width does not match the header");
  rows.push_back(std::move(cells));
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Pretty;
  throw DomainError("unknown output format '" + name + "'");
}

std::string format_double(double x) {
  char buf[40];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const std::vector<Table>& tables) {
  std::ostringstream os;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const Table& tab = tables[t];
    if (t) os << '\n';
    os << "# " << tab.title << '\n';
    for (std::size_t i = 0; i < tab.columns.size(); ++i)
      os << (i ? "," : "") << csv_cell(tab.columns[i]);
    os << '\n';
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    for (const auto& [k, v] : tab.notes) os << "# " << k << ": " << v << '\n';
  }
  return os.str();
}

std::string render_pretty(const std::vector<Table>& tables) {
  std::ostringstream os;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const Table& tab = tables[t];
    if (t) os << '\n';
    os << tab.title << '\n';
    std::vector<std::size_t> width(tab.columns.size());
    for (std::size_t i = 0; i < tab.columns.size(); ++i) width[i] = tab.columns[i].size();
    for (const auto& row : tab.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << "  " << cells[i];
        if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
      }
      os << '\n';
    };
    line(tab.columns);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : tab.rows) line(row);
    for (const auto& [k, v] : tab.notes) os << "  " << k << ": " << v << '\n';
  }
  return os.str();
}

json table_json(const Table& t) {
  return json{{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}, {"notes", t.notes}};
}

Table table_from(const json& j) {
  Table t;
  t.title = j.at("title").get<std::string>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  t.notes = j.at("notes").get<std::map<std::string, std::string>>();
  return t;
}

json series_json(const SeriesTable& s) {
  json values = json::object();
  for (const auto& [n, c] : s.values) values[std::to_string(n)] = c.str();
  return json{{"model", s.model}, {"params", s.params}, {"values", values}};
}

json estimate_json(const EstimateReport& r) {
  json j{{"method", r.method},   {"value", r.value},
         {"indices", r.indices}, {"raw", r.raw},
         {"accelerated", r.accelerated}, {"error_proxy", r.error_proxy},
         {"flags", r.flags}};
  j["target"] = r.target ? json(*r.target) : json(nullptr);
  j["residual"] = r.residual ? json(*r.residual) : json(nullptr);
  return j;
}

}  // namespace

std::string render(const std::vector<Table>& tables, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return render_csv(tables);
    case OutputFormat::Json: return to_json(tables) + "\n";
    case OutputFormat::Pretty: return render_pretty(tables);
  }
  return {};
}

std::string to_json(const std::vector<Table>& tables) {
  json arr = json::array();
  for (const auto& t : tables) arr.push_back(table_json(t));
  return json{{"tables", arr}}.dump(2);
}

std::vector<Table> tables_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<Table> out;
  for (const auto& t : j.at("tables")) out.push_back(table_from(t));
  return out;
}

std::string to_json(const SeriesTable& t) { return series_json(t).dump(2); }

SeriesTable series_from_json(const std::string& text) {
  json j = json::parse(text);
  SeriesTable s;
  s.model = j.at("model").get<std::string>();
  s.params = j.at("params").get<std::map<std::string, std::string>>();
  for (const auto& [k, v] : j.at("values").items()) s.values[std::stoi(k)] = BigCount(v.get<std::string>());
  return s;
}

std::string to_json(const EstimateReport& r) { return estimate_json(r).dump(2); }

EstimateReport estimate_from_json(const std::string& text) {
  json j = json::parse(text);
  EstimateReport r;
  r.method = j.at("method").get<std::string>();
  r.value = j.at("value").get<double>();
  r.indices = j.at("indices").get<std::vector<int>>();
  r.raw = j.at("raw").get<std::vector<double>>();
  r.accelerated = j.at("accelerated").get<std::vector<double>>();
  r.error_proxy = j.at("error_proxy").get<double>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  if (!j.at("target").is_null()) r.target = j.at("target").get<double>();
  if (!j.at("residual").is_null()) r.residual = j.at("residual").get<double>();
  return r;
}

bool operator==(const SeriesTable& a, const SeriesTable& b) {
  return a.model == b.model && a.params == b.params && a.values == b.values;
}

bool operator==(const EstimateReport& a, const EstimateReport& b) {
  return a.method == b.method && a.value == b.value && a.indices == b.indices && a.raw == b.raw &&
         a.accelerated == b.accelerated && a.error_proxy == b.error_proxy && a.flags == b.flags &&
         a.target == b.target && a.residual == b.residual;
}

Table estimate_table(const std::string& title, const EstimateReport& r) {
  Table t;
  t.title = title;
  t.columns = {"n", "raw", "accelerated"};
  // Accelerated term i uses the inputs ending at i + (raw - accelerated).
  const std::size_t lag = r.raw.size() - std::min(r.raw.size(), r.accelerated.size());
  for (std::size_t i = 0; i < r.raw.size(); ++i) {
    std::string acc = i >= lag ? format_double(r.accelerated[i - lag]) : "";
    std::string n = i < r.indices.size() ? std::to_string(r.indices[i]) : "";
    t.add_row({n, format_double(r.raw[i]), acc});
  }
  t.notes["method"] = r.method;
  t.notes["estimate"] = format_double(r.value);
  t.notes["error_proxy"] = format_double(r.error_proxy);
  if (r.target) t.notes["target"] = format_double(*r.target);
  if (r.residual) t.notes["residual"] = format_double(*r.residual);
  if (!r.flags.empty()) {
    std::string f;
    for (const auto& x : r.flags) f += (f.empty() ? "" : ";") + x;
    t.notes["flags"] = f;
  }
  return t;
}

}  // namespace latcon
