#include "eulerlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eulerlab {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string render_csv(const std::vector<SumSeries>& table,
                       const std::vector<std::string>& config_lines) {
    for (size_t i = 1; i < table.size(); ++i) {
        if (table[i].points.size() != table[0].points.size())
            throw std::invalid_argument("render_csv: series are not aligned");
        for (size_t j = 0; j < table[i].points.size(); ++j)
            if (table[i].points[j].first != table[0].points[j].first)
                throw std::invalid_argument("render_csv: series are not aligned");
    }
    std::string out;
    out += "# eulerlab ";
    out += kVersion;
    out += "\n";
    for (const auto& line : config_lines) out += "# " + line + "\n";
    out += "x";
    for (const auto& s : table) out += "," + s.label;
    out += "\n";
    size_t rows = table.empty() ? 0 : table[0].points.size();
    for (size_t j = 0; j < rows; ++j) {
        out += format_number(table[0].points[j].first);
        for (const auto& s : table) out += "," + format_number(s.points[j].second);
        out += "\n";
    }
    return out;
}

void emit_csv(const std::vector<SumSeries>& table,
              const std::filesystem::path& path,
              const std::vector<std::string>& config_lines) {
    write_file_atomic(path, render_csv(table, config_lines));
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<SumSeries>& table,
                       const SvgOptions& options) {
    if (table.empty())
        throw std::invalid_argument("render_svg: need at least one series");
    for (const auto& s : table)
        if (s.points.size() < 2)
            throw std::invalid_argument("render_svg: series '" + s.label +
                                        "' needs at least two points");

    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    auto map_x = [&](double x) {
        return options.log_x ? std::log10(x) : x;
    };
    for (const auto& s : table) {
        for (auto [x, y] : s.points) {
            if (options.log_x && x <= 0.0)
                throw std::invalid_argument(
                    "render_svg: log-x axis requires positive x");
            x_min = std::min(x_min, map_x(x));
            x_max = std::max(x_max, map_x(x));
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (y_max == y_min) {  // flat curves get a padded axis
        y_min -= 1.0;
        y_max += 1.0;
    }
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }

    const double ml = 70, mr = 20, mt = 20, mb = 45;
    double pw = options.width - ml - mr, ph = options.height - mt - mb;
    auto px = [&](double x) { return ml + (map_x(x) - x_min) / (x_max - x_min) * pw; };
    auto py = [&](double y) { return mt + (y_max - y) / (y_max - y_min) * ph; };

    std::string svg;
    char buf[256];
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                  "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  options.width, options.height, options.width, options.height);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"black\"/>\n",
                  ml, mt + ph, ml + pw, mt + ph);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"black\"/>\n",
                  ml, mt, ml, mt + ph);
    svg += buf;

    // ticks: 6 per axis
    for (int i = 0; i <= 5; ++i) {
        double fx = x_min + (x_max - x_min) * i / 5.0;
        double sx = ml + pw * i / 5.0;
        double label = options.log_x ? std::pow(10.0, fx) : fx;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"black\"/>\n",
                      sx, mt + ph, sx, mt + ph + 5);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" "
                      "text-anchor=\"middle\">%s</text>\n",
                      sx, mt + ph + 18, format_number(label).c_str());
        svg += buf;

        double fy = y_min + (y_max - y_min) * i / 5.0;
        double sy = py(fy);
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"black\"/>\n",
                      ml - 5, sy, ml, sy);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" "
                      "text-anchor=\"end\">%s</text>\n",
                      ml - 8, sy + 4, format_number(fy).c_str());
        svg += buf;
    }

    // curves
    for (size_t i = 0; i < table.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(*kPalette))];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : table[i].points) {
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(x), py(y));
            svg += buf;
        }
        svg += "\"/>\n";
    }

    // legend
    for (size_t i = 0; i < table.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(*kPalette))];
        double ly = mt + 16.0 + 18.0 * static_cast<double>(i);
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"%s\" stroke-width=\"2\"/>\n",
                      ml + pw - 150, ly - 4, ml + pw - 125, ly - 4, color);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%s</text>\n",
                      ml + pw - 120, ly, xml_escape(table[i].label).c_str());
        svg += buf;
    }

    svg += "</svg>\n";
    return svg;
}

void emit_svg(const std::vector<SumSeries>& table,
              const std::filesystem::path& path, const SvgOptions& options) {
    write_file_atomic(path, render_svg(table, options));
}

}  // namespace eulerlab
