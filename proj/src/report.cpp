#include "rieszap/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "rieszap/errors.hpp"

namespace rieszap::report {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw InvalidArgument("report row has the wrong number of cells");
    rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const auto* iv = std::get_if<std::int64_t>(&row[i])) {
                out << *iv;
            } else {
                out << format_real(std::get<double>(row[i]));
            }
        }
        out << '\n';
    }
    return out.str();
}

io::Json Table::to_json() const {
    io::Json arr = io::Json::array();
    for (const auto& row : rows_) {
        io::Json obj = io::Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](auto v) { obj[columns_[i]] = v; }, row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

std::string svg_loglog_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                             const std::vector<Series>& series) {
    constexpr double kWidth = 640, kHeight = 420, kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (s.x[i] <= 0 || s.y[i] <= 0) continue;
            xmin = std::min(xmin, std::log10(s.x[i]));
            xmax = std::max(xmax, std::log10(s.x[i]));
            ymin = std::min(ymin, std::log10(s.y[i]));
            ymax = std::max(ymax, std::log10(s.y[i]));
        }
    }
    if (!(xmin < xmax)) { xmin -= 0.5; xmax += 0.5; }
    if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
    xmin = std::floor(xmin); xmax = std::ceil(xmax);
    ymin = std::floor(ymin); ymax = std::ceil(ymax);

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (std::log10(x) - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return kTop + (ymax - std::log10(y)) / (ymax - ymin) * ph; };
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::ostringstream o;
    char buf[160];
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">" << title << "</text>\n";
    o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double e = xmin; e <= xmax; e += 1) {
        const double x = kLeft + (e - xmin) / (xmax - xmin) * pw;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"middle\">1e%d</text>\n",
                      x, kTop + ph + 16, static_cast<int>(e));
        o << buf;
    }
    for (double e = ymin; e <= ymax; e += 1) {
        const double y = kTop + (ymax - e) / (ymax - ymin) * ph;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"end\">1e%d</text>\n",
                      kLeft - 6, y + 4, static_cast<int>(e));
        o << buf;
    }
    o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" font-size=\"12\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
    o << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 " << kTop + ph / 2
      << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kColors[k % std::size(kColors)];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\""
          << (s.dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (s.x[i] <= 0 || s.y[i] <= 0) continue;
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
            o << buf;
        }
        o << "\"/>\n";
        const double ly = kTop + 14 + 18.0 * static_cast<double>(k);
        std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\"%s/>\n",
                      kLeft + pw + 10, ly, kLeft + pw + 30, ly, color, s.dashed ? " stroke-dasharray=\"5,4\"" : "");
        o << buf;
        o << "<text x=\"" << kLeft + pw + 36 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">" << s.label << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace rieszap::report
