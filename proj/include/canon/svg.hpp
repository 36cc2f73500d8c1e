#pragma once

#include "canon/dyck.hpp"
#include "canon/grid.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace canon {

struct SvgOptions {
    int cell = 32;
    int margin = 36;
    bool notches = true;
};

namespace detail {
inline void svg_polyline(std::ostringstream& os, const DyckPath& d, bool reflected, const char* color, auto&& px, auto&& py) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"4\" stroke-linejoin=\"round\" points=\"";
    int x = 0, y = 0;
    auto emit = [&] {
        const int a = reflected ? y : x, b = reflected ? x : y;
        os << px(a) << ',' << py(b) << ' ';
    };
    emit();
    for (Step s : d.steps()) {
        if (s == Step::E) ++x;
        else ++y;
        emit();
    }
    os << "\"/>\n";
}
} // namespace detail

/// Self-contained SVG of the decorated grid for sigma with path d (blue) and,
/// optionally, a second path drawn reflected across the diagonal (magenta).
inline std::string render_svg(const Permutation& sigma, const DyckPath& d, const std::optional<DyckPath>& second = std::nullopt,
                              const SvgOptions& opt = {}) {
    const int n = sigma.size();
    if (d.n() != n) throw domain_error("path size " + std::to_string(d.n()) + " does not match sigma size " + std::to_string(n));
    if (second && second->n() != n) throw domain_error("second path size does not match sigma size");
    const DecoratedGrid g(sigma);
    const int side = n * opt.cell;
    const int W = side + 2 * opt.margin;
    auto px = [&](int x) { return opt.margin + x * opt.cell; };
    auto py = [&](int y) { return opt.margin + side - y * opt.cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W << "\" viewBox=\"0 0 " << W << ' ' << W
       << "\" font-family=\"sans-serif\" font-size=\"" << opt.cell / 2 << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int i = 0; i <= n; ++i) {
        os << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(n)
           << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
        os << "<line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(n) << "\" y2=\"" << py(i)
           << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    }
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(n) << "\" y2=\"" << py(n)
       << "\" stroke=\"#888\" stroke-dasharray=\"4 4\"/>\n";

    for (int i : g.vertical_red_lines())
        os << "<line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(i)
           << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    for (int i : g.horizontal_red_lines())
        os << "<line x1=\"" << px(i) << "\" y1=\"" << py(i) << "\" x2=\"" << px(n) << "\" y2=\"" << py(i)
           << "\" stroke=\"red\" stroke-width=\"2\"/>\n";

    if (opt.notches) {
        const int q = opt.cell / 4;
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < col; ++row) {
                const Notch nt = g.notch({col, row});
                if (nt == Notch::upper_left) {
                    const int x = px(col), y = py(row + 1);
                    os << "<polygon points=\"" << x << ',' << y << ' ' << x + q << ',' << y << ' ' << x << ',' << y + q
                       << "\" fill=\"red\"/>\n";
                } else if (nt == Notch::lower_right) {
                    const int x = px(col + 1), y = py(row);
                    os << "<polygon points=\"" << x << ',' << y << ' ' << x - q << ',' << y << ' ' << x << ',' << y - q
                       << "\" fill=\"red\"/>\n";
                }
            }
    }

    for (int i = 0; i < n; ++i) {
        const int label = g.column_label(i);
        os << "<text x=\"" << px(i) + opt.cell / 2 << "\" y=\"" << py(0) + opt.cell * 3 / 4 << "\" text-anchor=\"middle\">" << label
           << "</text>\n";
        os << "<text x=\"" << px(0) - opt.cell / 2 << "\" y=\"" << py(i) - opt.cell / 3 << "\" text-anchor=\"middle\">" << label
           << "</text>\n";
    }

    detail::svg_polyline(os, d, false, "blue", px, py);
    if (second) detail::svg_polyline(os, *second, true, "magenta", px, py);
    os << "</svg>\n";
    return os.str();
}

} // namespace canon
