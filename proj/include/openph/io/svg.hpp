#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace openph::io {

struct SvgSeries {
    std::string label;
    std::vector<std::array<double, 2>> points;
    double opacity = 1.0;
    bool in_legend = true;
};

/// Point marks (circles), used for features like string nodes.
struct SvgMarkers {
    std::string label;
    std::vector<std::array<double, 2>> points;
};

struct SvgPlot {
    int width = 800;
    int height = 600;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    std::vector<SvgMarkers> markers;

    void validate() const;
};

/// Standalone SVG document: axes with 5 tick labels per axis, one polyline
/// per series, marker circles, and a legend of the in_legend series. Axis
/// ranges are fitted to the data with a 5% margin. Output is deterministic
/// for identical inputs. Returns bytes written.
std::size_t write_svg(const SvgPlot& plot, std::ostream& out);

/// Several plots tiled left to right, top to bottom, `columns` per row, as
/// one SVG document.
std::size_t write_svg_grid(const std::vector<SvgPlot>& panels, int columns, std::ostream& out);

}  // namespace openph::io
