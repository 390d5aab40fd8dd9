#pragma once

#include <fstream>
#include <string>
#include <vector>

// CSV and flat-report emission. Numbers go out with 12 significant digits in
// scientific notation so identical runs produce byte-identical files.

namespace bohmrad::io {

std::string format_number(double v);

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);
    bool good() const { return static_cast<bool>(out_); }

  private:
    std::ofstream out_;
    size_t n_cols_;
};

// One key=value pair per line, keys in insertion order.
class ReportWriter {
  public:
    explicit ReportWriter(const std::string& path);
    void field(const std::string& key, double value);
    void field(const std::string& key, const std::string& value);
    bool good() const { return static_cast<bool>(out_); }

  private:
    std::ofstream out_;
};

}  // namespace bohmrad::io
