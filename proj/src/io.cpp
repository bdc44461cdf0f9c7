#include "bandsel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bandsel {

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// Accepts "value" or "anything,...,value"; uses the last field.
bool parse_row(const std::string& line, double& out) {
  const std::size_t comma = line.find_last_of(',');
  const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
  std::istringstream is(field);
  is >> out;
  if (!is) return false;
  std::string rest;
  is >> rest;
  return rest.empty();
}

}  // namespace

std::vector<double> read_value_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v = 0.0;
    if (!parse_row(line, v)) {
      if (lineno == 1 && values.empty()) continue;  // header row
      throw std::runtime_error(path + ": malformed row " + std::to_string(lineno));
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::runtime_error(path + ": no numeric rows");
  return values;
}

void write_indexed_csv(const std::string& path, const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out << i << ',' << format17(values[i]) << '\n';
  if (!out) throw std::runtime_error("short write to " + path);
}

void write_columns_csv(const std::string& path, const std::vector<std::string>& headers,
                       const std::vector<const std::vector<double>*>& columns) {
  if (headers.size() != columns.size() || columns.empty())
    throw std::runtime_error("write_columns_csv: headers and columns must match and be nonempty");
  const std::size_t rows = columns.front()->size();
  for (const auto* col : columns)
    if (col == nullptr || col->size() != rows)
      throw std::runtime_error("write_columns_csv: column lengths differ");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t c = 0; c < headers.size(); ++c)
    out << (c == 0 ? "" : ",") << headers[c];
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c == 0 ? "" : ",") << format17((*columns[c])[r]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace bandsel
