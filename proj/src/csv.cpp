#include "lrdcp/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrdcp/errors.hpp"

namespace lrdcp {

namespace {

std::vector<std::string> split_line(const std::string& line,
                                    std::size_t lineno) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else {
      cell += ch;
    }
  }
  if (quoted)
    throw ingestion_error("line " + std::to_string(lineno) +
                          ": unterminated quote");
  out.push_back(cell);
  return out;
}

bool parse_number(const std::string& s, double* out) {
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t')) --e;
  if (b == e) return false;
  const auto res = std::from_chars(b, e, *out);
  return res.ec == std::errc() && res.ptr == e;
}

}  // namespace

csv_table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ingestion_error("cannot open '" + path + "'");
  csv_table table;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_line(line, lineno);
    if (first) {
      first = false;
      // a first row made entirely of numbers means there is no header
      double dummy;
      bool all_numeric = true;
      for (const auto& c : cells)
        if (!parse_number(c, &dummy)) {
          all_numeric = false;
          break;
        }
      if (all_numeric) {
        table.synthetic_header = true;
        for (std::size_t j = 0; j < cells.size(); ++j)
          table.header.push_back(std::to_string(j));
        table.rows.push_back(std::move(cells));
      } else {
        table.header = std::move(cells);
      }
      continue;
    }
    if (cells.size() != table.header.size())
      throw ingestion_error("'" + path + "' line " + std::to_string(lineno) +
                            ": expected " + std::to_string(table.header.size()) +
                            " fields, got " + std::to_string(cells.size()));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);  // LF line ends everywhere
  if (!out) throw domain_error("cannot write '" + path + "'");
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) out << ',';
      const std::string& c = cells[j];
      if (c.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char ch : c) {
          if (ch == '"') out << '"';
          out << ch;
        }
        out << '"';
      } else {
        out << c;
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  if (!out) throw domain_error("write failed on '" + path + "'");
}

time_series load_series(const std::string& path,
                        const std::string& value_column,
                        const std::string& label_column, bool log_returns,
                        bool absolute) {
  const csv_table table = read_csv(path);
  if (table.rows.empty()) throw ingestion_error("'" + path + "' has no data rows");

  auto find_column = [&](const std::string& sel) -> std::size_t {
    for (std::size_t j = 0; j < table.header.size(); ++j)
      if (table.header[j] == sel) return j;
    // fall back to a numeric index
    double idx;
    if (parse_number(sel, &idx) && idx >= 0 &&
        idx == std::floor(idx) && idx < static_cast<double>(table.header.size()))
      return static_cast<std::size_t>(idx);
    std::string cols;
    for (std::size_t j = 0; j < table.header.size(); ++j)
      cols += (j ? ", " : "") + table.header[j];
    throw ingestion_error("'" + path + "': no column '" + sel +
                          "' (available: " + cols + ")");
  };

  const std::size_t vcol = find_column(value_column.empty() ? "0" : value_column);
  std::size_t lcol = table.header.size();
  if (!label_column.empty()) lcol = find_column(label_column);

  time_series series;
  series.values.reserve(table.rows.size());
  const std::size_t header_lines = table.synthetic_header ? 0 : 1;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::string& cell = table.rows[i][vcol];
    double v;
    if (!parse_number(cell, &v))
      throw ingestion_error("'" + path + "' line " +
                            std::to_string(i + 1 + header_lines) +
                            ": cannot parse value '" + cell + "'");
    series.values.push_back(v);
    if (lcol < table.header.size())
      series.labels.push_back(table.rows[i][lcol]);
  }

  if (log_returns) {
    if (series.values.size() < 2)
      throw ingestion_error("'" + path + "': need >= 2 values for log-returns");
    std::vector<double> ret(series.values.size() - 1);
    for (std::size_t i = 1; i < series.values.size(); ++i) {
      if (!(series.values[i - 1] > 0.0) || !(series.values[i] > 0.0))
        throw ingestion_error("'" + path + "' line " +
                              std::to_string(i + 1 + header_lines) +
                              ": log-returns need positive values");
      ret[i - 1] = std::log(series.values[i] / series.values[i - 1]);
    }
    series.values = std::move(ret);
    if (!series.labels.empty())
      series.labels.erase(series.labels.begin());
  }
  if (absolute)
    for (double& v : series.values) v = std::fabs(v);
  return series;
}

}  // namespace lrdcp
