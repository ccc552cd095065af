#pragma once

#include <string>
#include <vector>

namespace memesim::app {

struct SeriesPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Static line-chart SVG with one panel per series, laid out left to right.
/// Output is a pure function of the input (fixed-precision coordinates).
std::string render_series_svg(const std::vector<SeriesPanel>& panels);

}  // namespace memesim::app
