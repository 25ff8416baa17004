#include "zdg/coloring.hpp"

#include <algorithm>
#include <set>

namespace zdg {

int ColoringAssignment::colors_used() const
{
    std::set<int> seen(vertex_color.begin(), vertex_color.end());
    for (const auto& [e, c] : edge_color) seen.insert(c);
    return static_cast<int>(seen.size());
}

std::string kind_name(ColoringAssignment::Kind k)
{
    switch (k) {
    case ColoringAssignment::Kind::vertex: return "vertex";
    case ColoringAssignment::Kind::edge: return "edge";
    case ColoringAssignment::Kind::total: return "total";
    }
    return "?";
}

ColoringCheck check_coloring(const SimpleGraph& g, const ColoringAssignment& a)
{
    using Kind = ColoringAssignment::Kind;
    auto fail = [](std::string why) { return ColoringCheck{false, std::move(why)}; };
    const int n = g.order();
    const bool vertices = a.kind != Kind::edge;
    const bool edges = a.kind != Kind::vertex;
    auto in_range = [&](int c) { return c >= 0 && c < a.color_count; };

    if (vertices) {
        if (static_cast<int>(a.vertex_color.size()) != n) return fail("vertex color table has wrong size");
        for (int v = 0; v < n; ++v)
            if (!in_range(a.vertex_color[static_cast<std::size_t>(v)])) return fail("vertex " + g.label(v) + " color out of range");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) && a.vertex_color[static_cast<std::size_t>(u)] == a.vertex_color[static_cast<std::size_t>(v)])
                    return fail("adjacent vertices " + g.label(u) + ", " + g.label(v) + " share a color");
    } else if (!a.vertex_color.empty()) {
        return fail("edge coloring carries vertex colors");
    }

    if (edges) {
        for (const auto& [e, c] : a.edge_color) {
            const auto [u, v] = e;
            if (u < 0 || v < 0 || u >= n || v >= n || u >= v || !g.adjacent(u, v)) return fail("colored pair is not an edge");
            if (!in_range(c)) return fail("edge color out of range");
        }
        if (a.edge_color.size() != g.edge_count()) return fail("not every edge is colored");
        // At each vertex: incident edge colors distinct and, for total
        // colorings, distinct from the vertex color.
        for (int v = 0; v < n; ++v) {
            std::set<int> seen;
            if (vertices) seen.insert(a.vertex_color[static_cast<std::size_t>(v)]);
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(v, w)) continue;
                const int c = a.edge_color.at({std::min(v, w), std::max(v, w)});
                if (!seen.insert(c).second) return fail("color clash at vertex " + g.label(v));
            }
        }
    } else if (!a.edge_color.empty()) {
        return fail("vertex coloring carries edge colors");
    }
    return {};
}

}  // namespace zdg
