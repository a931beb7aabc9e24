#include "eurdyn/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>

namespace eurdyn::report {

namespace {

std::string to_chars_str(double value, std::chars_format fmt, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, fmt, precision);
    return std::string(buf, res.ptr);
}

// Short tick-label form (6 significant digits).
std::string format_tick(double value) {
    if (value == 0.0) return "0"; // avoid "-0"
    return to_chars_str(value, std::chars_format::general, 6);
}

// Fixed two-decimal pixel coordinates keep the SVG compact and deterministic.
std::string px(double value) { return to_chars_str(value, std::chars_format::fixed, 2); }

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("write failed: " + path.string());
}

} // namespace

std::string format_double(double value) {
    return to_chars_str(value, std::chars_format::general, 17);
}

void write_csv(const std::filesystem::path& path, const std::string& comment,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
    if (columns.empty()) throw std::invalid_argument("write_csv: header must not be empty");
    for (const auto& row : rows)
        if (row.size() != columns.size())
            throw std::invalid_argument("write_csv: row width does not match header width");

    std::string out;
    out.reserve(64 * (rows.size() + 2));
    if (!comment.empty()) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    write_text_file(path, out);
}

void write_svg(const std::filesystem::path& path, const PlotSpec& spec) {
    static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                     "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
    constexpr int kPaletteSize = 8;
    constexpr double kHeight = 560.0;
    constexpr double kLeft = 72.0, kRight = 876.0, kTop = 44.0, kBottom = 504.0;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : spec.series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("write_svg: series x/y length mismatch");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!(xmin <= xmax)) throw std::invalid_argument("write_svg: no finite data points");
    if (spec.vline) {
        xmin = std::min(xmin, *spec.vline);
        xmax = std::max(xmax, *spec.vline);
    }
    // Pad degenerate or narrow ranges so every point is strictly inside the frame.
    double xpad = 0.02 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
    if (xpad <= 0.0) xpad = std::max(0.5, 0.02 * std::abs(xmin));
    if (ypad <= 0.0) ypad = std::max(0.5, 0.05 * std::abs(ymin));
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    const auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); };
    const auto sy = [&](double y) { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); };

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"560\" "
           "viewBox=\"0 0 900 560\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"900\" height=\"560\" fill=\"#ffffff\"/>\n";
    svg += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(kRight - kLeft) +
           "\" height=\"" + px(kBottom - kTop) + "\" fill=\"none\" stroke=\"#333333\"/>\n";

    // Ticks: 5 per axis, with light grid lines.
    for (int i = 0; i < 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        const double gx = sx(fx), gy = sy(fy);
        svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(gx) + "\" y2=\"" +
               px(kBottom) + "\" stroke=\"#e6e6e6\"/>\n";
        svg += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(gy) + "\" x2=\"" + px(kRight) +
               "\" y2=\"" + px(gy) + "\" stroke=\"#e6e6e6\"/>\n";
        svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(kBottom) + "\" x2=\"" + px(gx) +
               "\" y2=\"" + px(kBottom + 5) + "\" stroke=\"#333333\"/>\n";
        svg += "<line x1=\"" + px(kLeft - 5) + "\" y1=\"" + px(gy) + "\" x2=\"" + px(kLeft) +
               "\" y2=\"" + px(gy) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + px(gx) + "\" y=\"" + px(kBottom + 20) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
               "fill=\"#333333\">" +
               xml_escape(format_tick(fx)) + "</text>\n";
        svg += "<text x=\"" + px(kLeft - 9) + "\" y=\"" + px(gy + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\" "
               "fill=\"#333333\">" +
               xml_escape(format_tick(fy)) + "</text>\n";
    }

    if (!spec.title.empty())
        svg += "<text x=\"450\" y=\"26\" font-family=\"sans-serif\" font-size=\"16\" "
               "text-anchor=\"middle\" fill=\"#111111\">" +
               xml_escape(spec.title) + "</text>\n";
    if (!spec.x_label.empty())
        svg += "<text x=\"" + px(0.5 * (kLeft + kRight)) + "\" y=\"" + px(kHeight - 14) +
               "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
               "fill=\"#111111\">" +
               xml_escape(spec.x_label) + "</text>\n";
    if (!spec.y_label.empty())
        svg += "<text x=\"20\" y=\"" + px(0.5 * (kTop + kBottom)) +
               "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
               "transform=\"rotate(-90 20 " +
               px(0.5 * (kTop + kBottom)) + ")\" fill=\"#111111\">" + xml_escape(spec.y_label) +
               "</text>\n";

    if (spec.vline && std::isfinite(*spec.vline)) {
        const double gx = sx(*spec.vline);
        svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(gx) + "\" y2=\"" +
               px(kBottom) + "\" stroke=\"#888888\" stroke-width=\"1.5\" "
               "stroke-dasharray=\"6,4\"/>\n";
    }

    for (std::size_t k = 0; k < spec.series.size(); ++k) {
        const auto& s = spec.series[k];
        const char* color = kPalette[k % kPaletteSize];
        std::string pts;
        pts.reserve(14 * s.x.size());
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!pts.empty()) pts += ' ';
            pts += px(sx(s.x[i]));
            pts += ',';
            pts += px(sy(s.y[i]));
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
    }

    // Legend, top-right corner of the plot area.
    for (std::size_t k = 0; k < spec.series.size(); ++k) {
        const char* color = kPalette[k % kPaletteSize];
        const double ly = kTop + 18.0 + 20.0 * static_cast<double>(k);
        svg += "<line x1=\"" + px(kRight - 170) + "\" y1=\"" + px(ly - 4) + "\" x2=\"" +
               px(kRight - 140) + "\" y2=\"" + px(ly - 4) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2.5\"/>\n";
        svg += "<text x=\"" + px(kRight - 132) + "\" y=\"" + px(ly) +
               "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#111111\">" +
               xml_escape(spec.series[k].name) + "</text>\n";
    }

    svg += "</svg>\n";
    write_text_file(path, svg);
}

} // namespace eurdyn::report
