#pragma once

// Minimal self-contained SVG polyline plots: axes, ticks, labels, legend.
// No external renderer; output is deterministic for identical input.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace wedgeflow::svg {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

namespace detail {

inline std::string fmt(double v, const char* spec = "%.6g")
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

inline const char* palette(std::size_t i)
{
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                                    "#bcbd22", "#e377c2"};
    return kColors[i % 10];
}

}  // namespace detail

/// Renders the series as polylines. When logx/logy is set the corresponding
/// coordinate is plotted in log10 with power-of-ten tick labels; nonpositive
/// values are dropped from log axes.
inline std::string render_plot(const std::string& title, const std::string& xlabel,
                               const std::string& ylabel,
                               const std::vector<Series>& series, bool logx = false,
                               bool logy = false)
{
    const double width = 720, height = 520;
    const double ml = 80, mr = 160, mt = 50, mb = 60;

    auto tx = [logx](double x) { return logx ? std::log10(x) : x; };
    auto ty = [logy](double y) { return logy ? std::log10(y) : y; };

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& s : series)
        for (auto [px, py] : s.points) {
            if ((logx && !(px > 0.0)) || (logy && !(py > 0.0))) continue;
            x0 = std::min(x0, tx(px));
            x1 = std::max(x1, tx(px));
            y0 = std::min(y0, ty(py));
            y1 = std::max(y1, ty(py));
        }
    if (!(x1 >= x0)) { x0 = 0; x1 = 1; }
    if (!(y1 >= y0)) { y0 = 0; y1 = 1; }
    if (x1 == x0) { x0 -= 0.5; x1 += 0.5; }
    if (y1 == y0) { y0 -= 0.5; y1 += 0.5; }

    auto px_of = [&](double x) { return ml + (x - x0) / (x1 - x0) * (width - ml - mr); };
    auto py_of = [&](double y) { return height - mb - (y - y0) / (y1 - y0) * (height - mt - mb); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) +
           "\" height=\"" + detail::fmt(height) + "\" viewBox=\"0 0 " +
           detail::fmt(width) + " " + detail::fmt(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + detail::fmt(width / 2) + "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // axes
    out += "<line x1=\"" + detail::fmt(ml) + "\" y1=\"" + detail::fmt(height - mb) +
           "\" x2=\"" + detail::fmt(width - mr) + "\" y2=\"" + detail::fmt(height - mb) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + detail::fmt(ml) + "\" y1=\"" + detail::fmt(mt) + "\" x2=\"" +
           detail::fmt(ml) + "\" y2=\"" + detail::fmt(height - mb) +
           "\" stroke=\"black\"/>\n";

    const int nticks = 5;
    for (int i = 0; i <= nticks; ++i) {
        const double fx = x0 + (x1 - x0) * i / nticks;
        const double fy = y0 + (y1 - y0) * i / nticks;
        const double gx = px_of(fx), gy = py_of(fy);
        out += "<line x1=\"" + detail::fmt(gx) + "\" y1=\"" + detail::fmt(height - mb) +
               "\" x2=\"" + detail::fmt(gx) + "\" y2=\"" + detail::fmt(height - mb + 5) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::fmt(gx) + "\" y=\"" + detail::fmt(height - mb + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               (logx ? "1e" + detail::fmt(fx, "%.2g") : detail::fmt(fx, "%.4g")) +
               "</text>\n";
        out += "<line x1=\"" + detail::fmt(ml - 5) + "\" y1=\"" + detail::fmt(gy) +
               "\" x2=\"" + detail::fmt(ml) + "\" y2=\"" + detail::fmt(gy) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::fmt(ml - 8) + "\" y=\"" + detail::fmt(gy + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               (logy ? "1e" + detail::fmt(fy, "%.2g") : detail::fmt(fy, "%.4g")) +
               "</text>\n";
    }
    out += "<text x=\"" + detail::fmt((ml + width - mr) / 2) + "\" y=\"" +
           detail::fmt(height - 15) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           xlabel + "</text>\n";
    out += "<text x=\"20\" y=\"" + detail::fmt((mt + height - mb) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 " + detail::fmt((mt + height - mb) / 2) + ")\">" +
           ylabel + "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        std::string pts;
        for (auto [px, py] : series[si].points) {
            if ((logx && !(px > 0.0)) || (logy && !(py > 0.0))) continue;
            pts += detail::fmt(px_of(tx(px)), "%.2f") + "," +
                   detail::fmt(py_of(ty(py)), "%.2f") + " ";
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(detail::palette(si)) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        const double ly = mt + 16.0 * (double)si;
        out += "<line x1=\"" + detail::fmt(width - mr + 10) + "\" y1=\"" + detail::fmt(ly) +
               "\" x2=\"" + detail::fmt(width - mr + 30) + "\" y2=\"" + detail::fmt(ly) +
               "\" stroke=\"" + detail::palette(si) + "\" stroke-width=\"1.5\"/>\n";
        out += "<text x=\"" + detail::fmt(width - mr + 35) + "\" y=\"" + detail::fmt(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + series[si].label +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace wedgeflow::svg
