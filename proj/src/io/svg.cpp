#include "openph/io/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

namespace openph::io {

namespace {

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
};

constexpr double kMarginLeft = 62.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 46.0;

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

// Pixel coordinates at fixed 2 decimals keep the output locale-free and
// platform-stable.
std::string px(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (result.ec != std::errc{}) throw std::runtime_error("svg: coordinate formatting failed");
    return std::string(buf, result.ptr);
}

std::string tick_text(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
}

struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    bool any = false;

    void include(double v) {
        if (!any) {
            lo = hi = v;
            any = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }

    void finalize() {
        if (!(hi > lo)) {
            const double bump = 0.5 * std::max(std::abs(hi), 1.0);
            lo -= bump;
            hi += bump;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }

    double unit(double v) const { return (v - lo) / (hi - lo); }
};

void emit_plot_body(std::string& out, const SvgPlot& plot) {
    const double w = plot.width;
    const double h = plot.height;
    const double area_x0 = kMarginLeft;
    const double area_y0 = kMarginTop;
    const double area_x1 = w - kMarginRight;
    const double area_y1 = h - kMarginBottom;

    Axis ax, ay;
    for (const auto& s : plot.series)
        for (const auto& pt : s.points) {
            ax.include(pt[0]);
            ay.include(pt[1]);
        }
    for (const auto& m : plot.markers)
        for (const auto& pt : m.points) {
            ax.include(pt[0]);
            ay.include(pt[1]);
        }
    ax.finalize();
    ay.finalize();

    const auto map_x = [&](double v) { return area_x0 + ax.unit(v) * (area_x1 - area_x0); };
    const auto map_y = [&](double v) { return area_y1 - ay.unit(v) * (area_y1 - area_y0); };

    out += "<rect x=\"0\" y=\"0\" width=\"" + px(w) + "\" height=\"" + px(h) +
           "\" fill=\"#ffffff\"/>\n";
    out += "<rect x=\"" + px(area_x0) + "\" y=\"" + px(area_y0) + "\" width=\"" +
           px(area_x1 - area_x0) + "\" height=\"" + px(area_y1 - area_y0) +
           "\" fill=\"none\" stroke=\"#444444\"/>\n";

    if (!plot.title.empty())
        out += "<text x=\"" + px(0.5 * (area_x0 + area_x1)) + "\" y=\"" + px(kMarginTop - 12.0) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\" "
               "fill=\"#222222\">" +
               xml_escape(plot.title) + "</text>\n";
    if (!plot.x_label.empty())
        out += "<text x=\"" + px(0.5 * (area_x0 + area_x1)) + "\" y=\"" + px(h - 10.0) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
               "fill=\"#222222\">" +
               xml_escape(plot.x_label) + "</text>\n";
    if (!plot.y_label.empty())
        out += "<text x=\"14\" y=\"" + px(0.5 * (area_y0 + area_y1)) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
               "fill=\"#222222\" transform=\"rotate(-90 14 " +
               px(0.5 * (area_y0 + area_y1)) + ")\">" + xml_escape(plot.y_label) + "</text>\n";

    for (int i = 0; i < 5; ++i) {
        const double f = static_cast<double>(i) / 4.0;
        const double xv = ax.lo + f * (ax.hi - ax.lo);
        const double yv = ay.lo + f * (ay.hi - ay.lo);
        const double xp = area_x0 + f * (area_x1 - area_x0);
        const double yp = area_y1 - f * (area_y1 - area_y0);

        out += "<line x1=\"" + px(xp) + "\" y1=\"" + px(area_y1) + "\" x2=\"" + px(xp) +
               "\" y2=\"" + px(area_y1 + 5.0) + "\" stroke=\"#444444\"/>\n";
        out += "<text x=\"" + px(xp) + "\" y=\"" + px(area_y1 + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\" "
               "fill=\"#222222\">" +
               xml_escape(tick_text(xv)) + "</text>\n";

        out += "<line x1=\"" + px(area_x0 - 5.0) + "\" y1=\"" + px(yp) + "\" x2=\"" + px(area_x0) +
               "\" y2=\"" + px(yp) + "\" stroke=\"#444444\"/>\n";
        out += "<text x=\"" + px(area_x0 - 8.0) + "\" y=\"" + px(yp + 3.0) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\" "
               "fill=\"#222222\">" +
               xml_escape(tick_text(yv)) + "</text>\n";
    }

    for (std::size_t i = 0; i < plot.series.size(); ++i) {
        const auto& s = plot.series[i];
        const auto color = kPalette[i % kPalette.size()];
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.5\"";
        if (s.opacity < 1.0) out += " stroke-opacity=\"" + px(s.opacity) + "\"";
        out += " points=\"";
        for (std::size_t j = 0; j < s.points.size(); ++j) {
            if (j > 0) out += ' ';
            out += px(map_x(s.points[j][0]));
            out += ',';
            out += px(map_y(s.points[j][1]));
        }
        out += "\"/>\n";
    }

    for (const auto& m : plot.markers) {
        for (const auto& pt : m.points) {
            out += "<circle cx=\"" + px(map_x(pt[0])) + "\" cy=\"" + px(map_y(pt[1])) +
                   "\" r=\"3.50\" fill=\"#000000\"/>\n";
        }
    }

    std::vector<std::pair<std::string_view, std::string_view>> legend;  // color, label
    for (std::size_t i = 0; i < plot.series.size(); ++i)
        if (plot.series[i].in_legend && !plot.series[i].label.empty())
            legend.emplace_back(kPalette[i % kPalette.size()], plot.series[i].label);
    for (const auto& m : plot.markers)
        if (!m.label.empty()) legend.emplace_back("#000000", m.label);

    if (!legend.empty()) {
        const double entry_h = 16.0;
        const double box_w = 150.0;
        const double box_x = area_x1 - box_w - 6.0;
        const double box_y = area_y0 + 6.0;
        out += "<g class=\"legend\">\n";
        out += "<rect x=\"" + px(box_x) + "\" y=\"" + px(box_y) + "\" width=\"" + px(box_w) +
               "\" height=\"" + px(entry_h * static_cast<double>(legend.size()) + 6.0) +
               "\" fill=\"#ffffff\" fill-opacity=\"0.85\" stroke=\"#aaaaaa\"/>\n";
        for (std::size_t i = 0; i < legend.size(); ++i) {
            const double ly = box_y + 12.0 + entry_h * static_cast<double>(i);
            out += "<line x1=\"" + px(box_x + 6.0) + "\" y1=\"" + px(ly) + "\" x2=\"" +
                   px(box_x + 26.0) + "\" y2=\"" + px(ly) + "\" stroke=\"";
            out += legend[i].first;
            out += "\" stroke-width=\"2\"/>\n";
            out += "<text x=\"" + px(box_x + 32.0) + "\" y=\"" + px(ly + 4.0) +
                   "\" font-family=\"monospace\" font-size=\"11\" fill=\"#222222\">" +
                   xml_escape(legend[i].second) + "</text>\n";
        }
        out += "</g>\n";
    }
}

std::size_t write_document(std::string body, double width, double height, std::ostream& out) {
    std::string text = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    text += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) + "\" height=\"" +
            px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
    text += body;
    text += "</svg>\n";
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("svg: write failed");
    return text.size();
}

}  // namespace

void SvgPlot::validate() const {
    if (width < 100 || height < 100)
        throw std::invalid_argument("svg: plot must be at least 100x100 pixels");
    if (series.empty()) throw std::invalid_argument("svg: plot needs at least one series");
    for (const auto& s : series)
        for (const auto& pt : s.points)
            if (!std::isfinite(pt[0]) || !std::isfinite(pt[1]))
                throw std::invalid_argument("svg: series contains non-finite point");
    for (const auto& m : markers)
        for (const auto& pt : m.points)
            if (!std::isfinite(pt[0]) || !std::isfinite(pt[1]))
                throw std::invalid_argument("svg: marker contains non-finite point");
}

std::size_t write_svg(const SvgPlot& plot, std::ostream& out) {
    plot.validate();
    std::string body;
    emit_plot_body(body, plot);
    return write_document(std::move(body), plot.width, plot.height, out);
}

std::size_t write_svg_grid(const std::vector<SvgPlot>& panels, int columns, std::ostream& out) {
    if (panels.empty()) throw std::invalid_argument("svg: grid needs at least one panel");
    if (columns < 1) throw std::invalid_argument("svg: grid needs at least one column");
    for (const auto& p : panels) p.validate();

    const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
    int panel_w = 0, panel_h = 0;
    for (const auto& p : panels) {
        panel_w = std::max(panel_w, p.width);
        panel_h = std::max(panel_h, p.height);
    }

    std::string body;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const int cx = static_cast<int>(i) % columns;
        const int cy = static_cast<int>(i) / columns;
        body += "<g transform=\"translate(" + px(cx * panel_w) + " " + px(cy * panel_h) + ")\">\n";
        emit_plot_body(body, panels[i]);
        body += "</g>\n";
    }
    const int used_cols = std::min<int>(columns, static_cast<int>(panels.size()));
    return write_document(std::move(body), used_cols * panel_w, rows * panel_h, out);
}

}  // namespace openph::io
