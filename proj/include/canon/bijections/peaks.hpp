#pragma once

#include "canon/dyck.hpp"

#include <algorithm>
#include <vector>

namespace canon {

/// Cells of the high peaks of d (peaks whose corner is off the line x = y + 1).
inline std::vector<Cell> high_peak_cells(const DyckPath& d) {
    std::vector<Cell> cells;
    for (const Point& p : peak_stats(d).peak_corners)
        if (p.x != p.y + 1) cells.push_back(peak_cell(p));
    return cells;
}

/// The unique path whose high peaks occur exactly at `cells`. The region
/// between such a path and the diagonal is generated, under moving up and
/// left, by the diagonal cells together with the given cells.
inline DyckPath path_from_high_peak_cells(int n, const std::vector<Cell>& cells) {
    std::vector<int> h(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        int lowest = c;
        for (const Cell& p : cells)
            if (p.x >= c) lowest = std::min(lowest, p.y);
        h[static_cast<std::size_t>(c)] = lowest;
    }
    return DyckPath::from_heights(h);
}

/// The path whose valleys occur at the high-peak cells of d.
inline DyckPath rho(const DyckPath& d) {
    std::vector<Point> valleys;
    for (const Cell& c : high_peak_cells(d)) valleys.push_back({c.x, c.y + 1});
    return path_from_valley_corners(d.n(), valleys);
}

inline DyckPath rho_inv(const DyckPath& d) {
    std::vector<Cell> cells;
    for (const Point& v : peak_stats(d).valley_corners) cells.push_back(valley_cell(v));
    return path_from_high_peak_cells(d.n(), cells);
}

/// Lalanne-Kreweras involution by complementing the peak coordinates: if the
/// peak corners of d are (x_i, y_i), the peak corners of lk(d) are (y'_i, x'_i)
/// where x', y' enumerate {0..n} minus the x's and y's.
inline DyckPath lk(const DyckPath& d) {
    const int n = d.n();
    if (n == 0) return d;
    std::vector<bool> in_x(static_cast<std::size_t>(n) + 1, false), in_y(static_cast<std::size_t>(n) + 1, false);
    for (const Point& p : peak_stats(d).peak_corners) {
        in_x[static_cast<std::size_t>(p.x)] = true;
        in_y[static_cast<std::size_t>(p.y)] = true;
    }
    std::vector<int> xs, ys;
    for (int v = 0; v <= n; ++v) {
        if (!in_x[static_cast<std::size_t>(v)]) xs.push_back(v);
        if (!in_y[static_cast<std::size_t>(v)]) ys.push_back(v);
    }
    std::vector<Point> corners;
    for (std::size_t i = 0; i < xs.size(); ++i) corners.push_back({ys[i], xs[i]});
    return path_from_peak_corners(n, corners);
}

inline DyckPath lk_rho(const DyckPath& d) { return lk(rho(d)); }

} // namespace canon
