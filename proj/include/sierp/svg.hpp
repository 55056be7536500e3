#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sierp {

/// Filled squares on the unit viewBox for a cell set at resolution 2^-k
/// (fig. 1 style). Output is deterministic: fixed formatting, input order.
std::string svg_cell_grid(const std::vector<std::pair<std::int64_t, std::int64_t>>& cells, int k);

/// Scatter of points with a small circle per point (fig. 2 style).
std::string svg_scatter(const std::vector<std::pair<double, double>>& points);

/// Polyline chart of one or more curves sharing the x grid (figs. 3-5 style).
std::string svg_curves(const std::vector<double>& xs, const std::vector<std::vector<double>>& curves);

} // namespace sierp
