#pragma once

#include <string>
#include <vector>

#include "lrdcp/marginals.hpp"

namespace lrdcp {

// Minimal RFC-4180-ish CSV: comma separated, optional double-quoted fields,
// LF or CRLF line ends, '.' decimal point.
struct csv_table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool synthetic_header = false;  // file had no header row
};

csv_table read_csv(const std::string& path);

// Shortest round-trip decimal form of a double (locale independent).
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Load one column as a series.  `value_column` is a header name, or a
// 0-based index for headerless files.  Optional label column; optional
// log-return and absolute-value preprocessing (applied in that order).
// Unparseable or missing cells raise ingestion_error with the line number.
time_series load_series(const std::string& path,
                        const std::string& value_column,
                        const std::string& label_column = "",
                        bool log_returns = false, bool absolute = false);

}  // namespace lrdcp
