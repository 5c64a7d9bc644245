#pragma once

#include <string>
#include <utility>
#include <vector>

// Tabular output shared by the command-line tool and the verification
// driver.  CSV export echoes the generating configuration as '#'-prefixed
// header lines so a result file is reproducible from its own header.

namespace pu::io {

enum class Format { Csv, Json };

struct Table {
  std::vector<std::pair<std::string, std::string>> config;  // echoed as "# key=value"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_config(const std::string& key, const std::string& value);
  void add_config(const std::string& key, double value);
  void add_config(const std::string& key, long long value);
};

// Deterministic decimal rendering (%.15g).
std::string fmt(double v);
std::string fmt(long long v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

Format parse_format(const std::string& name);  // "csv" | "json"

// path "-" writes to stdout.
void write_table(const Table& t, const std::string& path, Format f);

}  // namespace pu::io
