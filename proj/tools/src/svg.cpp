#include "memesim/app/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace memesim::app {

namespace {

constexpr double kPanelWidth = 480.0;
constexpr double kPanelHeight = 320.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 16.0;
constexpr double kTop = 36.0;
constexpr double kBottom = 48.0;

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void render_panel(std::string& svg, const SeriesPanel& panel, double x0) {
    const double plot_w = kPanelWidth - kLeft - kRight;
    const double plot_h = kPanelHeight - kTop - kBottom;
    const double left = x0 + kLeft;
    const double bottom = kTop + plot_h;

    const std::size_t n = std::min(panel.x.size(), panel.y.size());
    double xmin = 0.0;
    double xmax = 1.0;
    double ymax = 1.0;
    if (n > 0) {
        xmin = *std::min_element(panel.x.begin(), panel.x.begin() + static_cast<std::ptrdiff_t>(n));
        xmax = *std::max_element(panel.x.begin(), panel.x.begin() + static_cast<std::ptrdiff_t>(n));
        ymax = std::max(1.0, *std::max_element(panel.y.begin(),
                                               panel.y.begin() + static_cast<std::ptrdiff_t>(n)));
    }
    if (xmax <= xmin) {
        xmax = xmin + 1.0;
    }
    auto sx = [&](double v) { return left + (v - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double v) { return bottom - v / ymax * plot_h; };

    svg += "<g>\n";
    svg += "<text x=\"" + fixed(x0 + kPanelWidth / 2) + "\" y=\"22.00\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(panel.title) + "</text>\n";
    svg += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(plot_w) +
           "\" height=\"" + fixed(plot_h) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (double frac : {0.0, 0.5, 1.0}) {
        const double yv = frac * ymax;
        svg += "<text x=\"" + fixed(left - 6) + "\" y=\"" + fixed(sy(yv) + 4) +
               "\" text-anchor=\"end\" font-size=\"10\">" + tick_label(yv) + "</text>\n";
        const double xv = xmin + frac * (xmax - xmin);
        svg += "<text x=\"" + fixed(sx(xv)) + "\" y=\"" + fixed(bottom + 14) +
               "\" text-anchor=\"middle\" font-size=\"10\">" + tick_label(xv) + "</text>\n";
    }
    svg += "<text x=\"" + fixed(left + plot_w / 2) + "\" y=\"" + fixed(kPanelHeight - 10) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + escape(panel.x_label) + "</text>\n";
    svg += "<text x=\"" + fixed(x0 + 14) + "\" y=\"" + fixed(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " + fixed(x0 + 14) + " " +
           fixed(kTop + plot_h / 2) + ")\">" + escape(panel.y_label) + "</text>\n";
    svg += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) svg += ' ';
        svg += fixed(sx(panel.x[i])) + "," + fixed(sy(panel.y[i]));
    }
    svg += "\"/>\n</g>\n";
}

}  // namespace

std::string render_series_svg(const std::vector<SeriesPanel>& panels) {
    const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(1, panels.size()));
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width) + "\" height=\"" +
           fixed(kPanelHeight) + "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(kPanelHeight) +
           "\" font-family=\"sans-serif\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        render_panel(svg, panels[i], kPanelWidth * static_cast<double>(i));
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace memesim::app
