#pragma once

#include <sl2orbit/hompoly.hpp>
#include <sl2orbit/hwproduct.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace sl2orbit {

// Newton-polygon style lattice diagram: labeled point chains over a unit
// grid, an optional darker sublattice grid of period f, and an optional
// j = i diagonal guide.
struct DiagramSpec {
    struct Polygon {
        std::string label;
        std::vector<std::pair<int, int>> points;  // (u, v) lattice points
        std::string style;                        // stroke color, e.g. "#1f77b4"
    };
    std::vector<Polygon> polygons;
    int extent_u = 0;
    int extent_v = 0;
    bool diagonal = false;
    long f = 0;  // 0 or 1: no sublattice grid

    void fit_extent() {
        for (const auto& poly : polygons)
            for (const auto& [u, v] : poly.points) {
                extent_u = std::max(extent_u, u);
                extent_v = std::max(extent_v, v);
            }
        extent_u = std::max(extent_u, 1);
        extent_v = std::max(extent_v, 1);
    }
};

// Decomposition view: one chain per nonzero w_s.
inline DiagramSpec diagram_from_decomposition(const ProductDecomposition& decomposition) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    DiagramSpec spec;
    for (const auto& [s, w] : decomposition.components) {
        if (w.is_zero()) continue;
        DiagramSpec::Polygon poly;
        poly.label = "w" + std::to_string(s);
        poly.points = newton_points(w);
        poly.style = palette[s % 8];
        spec.polygons.push_back(std::move(poly));
    }
    spec.diagonal = true;
    spec.fit_extent();
    return spec;
}

// Deterministic SVG text: fixed ordering, integer pixel coordinates.
inline std::string render_svg(const DiagramSpec& spec) {
    const int cell = 40, margin = 30;
    int width = margin * 2 + spec.extent_u * cell;
    int height = margin * 2 + spec.extent_v * cell;
    auto px = [&](int u) { return margin + u * cell; };
    auto py = [&](int v) { return height - margin - v * cell; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // Light unit grid.
    for (int u = 0; u <= spec.extent_u; ++u)
        svg << "<line x1=\"" << px(u) << "\" y1=\"" << py(0) << "\" x2=\"" << px(u) << "\" y2=\""
            << py(spec.extent_v) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int v = 0; v <= spec.extent_v; ++v)
        svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(v) << "\" x2=\"" << px(spec.extent_u)
            << "\" y2=\"" << py(v) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    // Darker sublattice dots with period f along j - i.
    if (spec.f > 1) {
        for (int u = 0; u <= spec.extent_u; ++u)
            for (int v = 0; v <= spec.extent_v; ++v)
                if ((v - u) % spec.f == 0)
                    svg << "<circle cx=\"" << px(u) << "\" cy=\"" << py(v)
                        << "\" r=\"3\" fill=\"#999999\"/>\n";
    }

    // Axes.
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(spec.extent_u)
        << "\" y2=\"" << py(0) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
        << py(spec.extent_v) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";

    // Diagonal j = i guide.
    if (spec.diagonal) {
        int reach = std::min(spec.extent_u, spec.extent_v);
        svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(reach)
            << "\" y2=\"" << py(reach)
            << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (const auto& poly : spec.polygons) {
        const std::string& color = poly.style.empty() ? "#1f77b4" : poly.style;
        if (poly.points.size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            for (std::size_t t = 0; t < poly.points.size(); ++t) {
                if (t) svg << " ";
                svg << px(poly.points[t].first) << "," << py(poly.points[t].second);
            }
            svg << "\"/>\n";
        }
        for (const auto& [u, v] : poly.points)
            svg << "<circle cx=\"" << px(u) << "\" cy=\"" << py(v) << "\" r=\"4\" fill=\"" << color
                << "\"/>\n";
        if (!poly.points.empty())
            svg << "<text x=\"" << (px(poly.points.front().first) + 6) << "\" y=\""
                << (py(poly.points.front().second) - 6) << "\" font-size=\"13\" fill=\"" << color
                << "\">" << poly.label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sl2orbit
