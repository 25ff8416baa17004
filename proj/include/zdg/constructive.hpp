#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/coloring.hpp"
#include "zdg/graph.hpp"
#include "zdg/poset.hpp"

namespace zdg {

// Raised when a construction's preconditions fail; what() names the failed one.
class ConstructionRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Total coloring of K_n: n colors for odd n, n + 1 for even n.
ColoringAssignment complete_graph_total_coloring(int n);

// Both return a total coloring of complement(zdg(p)), vertices in zdg(p) order.
ColoringAssignment complement_total_coloring_two_atoms(const FinitePoset& p);
ColoringAssignment complement_total_coloring_three_atoms(const FinitePoset& p);

struct ThreeAtomClassSizes {
    std::vector<int> l;  // |[q_i]|, atom class sizes
    std::vector<int> m;  // |[q_i]*|, class of elements above every atom but q_i
    int vertices = 0;
};
// Throws ConstructionRefused unless p is 0-distributive with three atoms.
ThreeAtomClassSizes three_atom_class_sizes(const FinitePoset& p);
// 4 l_i >= |V| for every i.
bool three_atom_hypothesis(const ThreeAtomClassSizes& s);

struct DegreeFormula {
    int formula = 0;  // |V| - min_i |[q_i]| - 1
    int direct = 0;   // maximum degree of complement(zdg(p))
    bool agree() const { return formula == direct; }
};
DegreeFormula max_degree_complement_formula(const FinitePoset& p);

enum class ConstructionPath { two_atoms, three_atoms, density_search };

struct ComplementColoring {
    ConstructionPath path = ConstructionPath::two_atoms;
    SimpleGraph graph;  // complement(zdg(p))
    ColoringAssignment assignment;
    int delta = 0;
};

// Two atoms and hypothesis-satisfying three-atom posets use the explicit
// constructions; anything else gets a bounded search for a (Delta + 2)-total
// coloring. Throws ConstructionRefused if that search gives up.
ComplementColoring complement_total_coloring(const FinitePoset& p, long long node_limit = 2'000'000);

std::string path_name(ConstructionPath p);

}  // namespace zdg
