#pragma once

#include <string>
#include <vector>

namespace bandsel {

// Shortest text that round-trips a double exactly is 17 significant digits.
std::string format17(double x);

// Reads one numeric column: plain values, or "index,value" rows (the value is
// the last comma-separated field). A non-numeric first line is treated as a
// header. Throws runtime_error on unreadable files or malformed rows.
std::vector<double> read_value_column(const std::string& path);

// "index,value" rows, 17 significant digits.
void write_indexed_csv(const std::string& path, const std::vector<double>& values);

// Arbitrary columns, 17 significant digits; all columns must share a length.
void write_columns_csv(const std::string& path, const std::vector<std::string>& headers,
                       const std::vector<const std::vector<double>*>& columns);

}  // namespace bandsel
