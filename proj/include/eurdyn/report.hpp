#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eurdyn::report {

// An output file could not be created or written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Locale-independent decimal text for a double, with enough significant digits
// (up to 17) that parsing the result recovers the value bit-for-bit.
std::string format_double(double value);

// Writes a CSV file: an optional '#'-prefixed comment line, the header row, then one
// line per data row. Every row must have exactly columns.size() cells. Cells are
// written verbatim (numbers should be pre-formatted with format_double). The file is
// opened in binary mode so the bytes are platform-independent.
void write_csv(const std::filesystem::path& path, const std::string& comment,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

// One named curve. x and y must have equal length; non-finite points are skipped
// when drawing but still participate in nothing else.
struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    std::optional<double> vline; // dashed vertical marker, e.g. a detected transition
};

// Writes a self-contained SVG line plot: axes, ticks, legend, polylines. No external
// fonts, scripts, stylesheets, or images are referenced.
void write_svg(const std::filesystem::path& path, const PlotSpec& spec);

} // namespace eurdyn::report
