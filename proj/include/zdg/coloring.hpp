#pragma once

#include <map>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct ColoringAssignment {
    enum class Kind { vertex, edge, total };

    Kind kind = Kind::vertex;
    std::vector<int> vertex_color;                // empty for edge colorings
    std::map<SimpleGraph::Edge, int> edge_color;  // keys (u, v) with u < v
    int color_count = 0;

    int colors_used() const;
};

struct ColoringCheck {
    bool valid = true;
    std::string reason;
};

// Independent validity check; shares no code with the solvers.
ColoringCheck check_coloring(const SimpleGraph& g, const ColoringAssignment& a);

std::string kind_name(ColoringAssignment::Kind k);

}  // namespace zdg
