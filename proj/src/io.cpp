#include "bohmrad/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace bohmrad::io {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : out_(path), n_cols_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != n_cols_)
        throw std::runtime_error("csv row width does not match header");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_number(values[i]);
    }
    out_ << '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != n_cols_)
        throw std::runtime_error("csv row width does not match header");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

ReportWriter::ReportWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
}

void ReportWriter::field(const std::string& key, double value) {
    out_ << key << '=' << format_number(value) << '\n';
}

void ReportWriter::field(const std::string& key, const std::string& value) {
    out_ << key << '=' << value << '\n';
}

}  // namespace bohmrad::io
