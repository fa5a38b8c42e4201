#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rieszap/io.hpp"

namespace rieszap::report {

using Cell = std::variant<std::int64_t, double>;

// Rows of numeric cells under a fixed header; emitted as CSV or a JSON array
// of objects. Doubles print with 17 significant digits.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> row);
    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

    std::string to_csv() const;
    io::Json to_json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_real(double v);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

// Plain SVG line chart on log-log axes.
std::string svg_loglog_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                             const std::vector<Series>& series);

}  // namespace rieszap::report
