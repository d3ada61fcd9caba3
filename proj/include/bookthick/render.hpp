#pragma once

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <string>

#include "embedding.hpp"
#include "graph.hpp"

namespace bookthick {

struct render_style {
    double unit = 40.0;   // spine distance between consecutive vertices
    double margin = 30.0;
    double vertex_radius = 4.0;
};

/// Arc diagram as SVG: vertices on a horizontal spine in order, page p edges
/// as semicircles, odd pages above the spine and even pages below.
inline std::string render_svg(const graph &g, const book_embedding &emb, const render_style &style = {})
{
    static constexpr std::array<const char *, 8> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                            "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    const int n = g.n();
    const double half_span = std::max(0, n - 1) * style.unit / 2.0;
    const double width = 2 * style.margin + std::max(0, n - 1) * style.unit;
    const double height = 2 * style.margin + 2 * half_span;
    const double spine_y = style.margin + half_span;
    auto x_of = [&](vertex v) { return style.margin + emb.order.position(v) * style.unit; };

    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<line x1=\"" << style.margin << "\" y1=\"" << spine_y << "\" x2=\"" << width - style.margin << "\" y2=\"" << spine_y
        << "\" stroke=\"#888888\" stroke-width=\"1.0\"/>\n";
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto &e = g.edge_at(i);
        const int page = emb.assignment.pages.at(i);
        double x1 = x_of(e.u), x2 = x_of(e.v);
        if (x1 > x2)
            std::swap(x1, x2);
        const double r = (x2 - x1) / 2.0;
        const int sweep = page % 2 == 1 ? 1 : 0;
        const auto colour = palette[static_cast<std::size_t>(page - 1) % palette.size()];
        out << "<path d=\"M " << x1 << ' ' << spine_y << " A " << r << ' ' << r << " 0 0 " << sweep << ' ' << x2 << ' ' << spine_y
            << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\"";
        if (static_cast<std::size_t>(page - 1) >= palette.size())
            out << " stroke-dasharray=\"4 2\"";
        out << " data-page=\"" << page << "\"/>\n";
    }
    for (int p = 0; p < n; ++p)
        out << "<circle cx=\"" << style.margin + p * style.unit << "\" cy=\"" << spine_y << "\" r=\"" << style.vertex_radius
            << "\" fill=\"#000000\"><title>" << emb.order.at(p) << "</title></circle>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace bookthick
