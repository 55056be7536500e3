#include "sierp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sierp {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Bounds {
    double lo = 0.0, hi = 1.0;
    double span() const { return hi - lo; }
};

Bounds bounds_of(const std::vector<double>& vs) {
    if (vs.empty()) return {};
    Bounds b{vs.front(), vs.front()};
    for (double v : vs) {
        b.lo = std::min(b.lo, v);
        b.hi = std::max(b.hi, v);
    }
    if (b.span() == 0.0) {
        b.lo -= 1.0;
        b.hi += 1.0;
    }
    return b;
}

} // namespace

std::string svg_cell_grid(const std::vector<std::pair<std::int64_t, std::int64_t>>& cells, int k) {
    if (k < 1) throw std::invalid_argument("svg_cell_grid: k must be >= 1");
    const double cell = 1.0 / std::pow(2.0, k);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"512\" height=\"512\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
    for (const auto& [cx, cy] : cells) {
        const double x = static_cast<double>(cx) * cell;
        const double y = 1.0 - (static_cast<double>(cy) + 1.0) * cell; // svg y grows downward
        out += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(cell) + "\" height=\"" + fmt(cell) +
               "\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string svg_scatter(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [x, y] : points) {
        xs.push_back(x);
        ys.push_back(y);
    }
    const Bounds bx = bounds_of(xs);
    const Bounds by = bounds_of(ys);
    const double margin = 0.05;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"512\" height=\"512\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double px = margin + (1 - 2 * margin) * (xs[i] - bx.lo) / bx.span();
        const double py = 1.0 - margin - (1 - 2 * margin) * (ys[i] - by.lo) / by.span();
        out += "<circle cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) + "\" r=\"0.004\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string svg_curves(const std::vector<double>& xs, const std::vector<std::vector<double>>& curves) {
    static const char* kColors[] = {"black", "crimson", "steelblue", "seagreen"};
    const Bounds bx = bounds_of(xs);
    std::vector<double> all;
    for (const auto& c : curves) all.insert(all.end(), c.begin(), c.end());
    const Bounds by = bounds_of(all);
    const double margin = 0.06;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"640\" height=\"640\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
    auto map_x = [&](double x) { return margin + (1 - 2 * margin) * (x - bx.lo) / bx.span(); };
    auto map_y = [&](double y) { return 1.0 - margin - (1 - 2 * margin) * (y - by.lo) / by.span(); };
    if (by.lo < 0.0 && by.hi > 0.0) { // zero axis
        out += "<line x1=\"" + fmt(map_x(bx.lo)) + "\" y1=\"" + fmt(map_y(0)) + "\" x2=\"" + fmt(map_x(bx.hi)) +
               "\" y2=\"" + fmt(map_y(0)) + "\" stroke=\"lightgray\" stroke-width=\"0.002\"/>\n";
    }
    for (std::size_t c = 0; c < curves.size(); ++c) {
        out += "<polyline fill=\"none\" stroke=\"";
        out += kColors[c % 4];
        out += "\" stroke-width=\"0.003\" points=\"";
        for (std::size_t i = 0; i < xs.size() && i < curves[c].size(); ++i) {
            if (i) out += ' ';
            out += fmt(map_x(xs[i])) + "," + fmt(map_y(curves[c][i]));
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace sierp
