#include "pu/scan_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace pu::io {

void Table::add_config(const std::string& key, const std::string& value) {
  config.emplace_back(key, value);
}

void Table::add_config(const std::string& key, double value) { config.emplace_back(key, fmt(value)); }

void Table::add_config(const std::string& key, long long value) {
  config.emplace_back(key, fmt(value));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt(long long v) { return std::to_string(v); }

std::string to_csv(const Table& t) {
  std::string out;
  for (const auto& [key, value] : t.config) {
    out += "# ";
    out += key;
    out += "=";
    out += value;
    out += "\n";
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ",";
    out += t.columns[i];
  }
  out += "\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size())
      throw std::logic_error("table row width does not match the column list");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.config) cfg[key] = value;
  j["config"] = cfg;
  j["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size())
      throw std::logic_error("table row width does not match the column list");
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::domain_error("unknown output format: " + name + " (expected csv or json)");
}

void write_table(const Table& t, const std::string& path, Format f) {
  const std::string body = f == Format::Csv ? to_csv(t) : to_json(t);
  if (path == "-" || path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body;
}

}  // namespace pu::io
