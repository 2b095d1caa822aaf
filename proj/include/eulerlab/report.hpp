#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eulerlab/series.hpp"

namespace eulerlab {

inline constexpr const char* kVersion = "0.1.0";

struct SvgOptions {
    bool log_x = false;
    int width = 900;
    int height = 600;
};

// Writes `content` atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

// CSV with '#' comment lines (version + resolved config), a header row of
// labels, and one row per x.  All series must be aligned on the same xs.
// 12 significant digits, '.' decimal point, ',' separator, no locale
// dependence.
std::string render_csv(const std::vector<SumSeries>& table,
                       const std::vector<std::string>& config_lines);
void emit_csv(const std::vector<SumSeries>& table,
              const std::filesystem::path& path,
              const std::vector<std::string>& config_lines);

// Static SVG: one polyline per series, axes with ticks, legend from labels.
// Requires at least one series with at least two points each.
std::string render_svg(const std::vector<SumSeries>& table,
                       const SvgOptions& options = {});
void emit_svg(const std::vector<SumSeries>& table,
              const std::filesystem::path& path,
              const SvgOptions& options = {});

// "%.12g" formatting used for every number in reports
std::string format_number(double v);

}  // namespace eulerlab
