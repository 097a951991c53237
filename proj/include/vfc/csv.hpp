#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace vfc {

/// %.17g: shortest form that round-trips any double.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Minimal CSV assembly: one header row, numeric cells printed with 17
/// significant digits so output is byte-stable for identical inputs.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(const std::vector<double>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += ',';
      line += format_double(cells[i]);
    }
    rows_.push_back(std::move(line));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (i > 0) out += ',';
      out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
      out += row;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace vfc
