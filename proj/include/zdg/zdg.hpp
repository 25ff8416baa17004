#pragma once

#include <vector>

#include "zdg/graph.hpp"
#include "zdg/poset.hpp"
#include "zdg/quotient.hpp"

namespace zdg {

// Vertices Z(P)\{0} in base order, edge ab iff {a,b}^l = {0}.
SimpleGraph zdg(const FinitePoset& p);
// Vertices P\{0,1} (P\{0} without a top), same adjacency.
SimpleGraph zdg_star(const FinitePoset& p);
// Vertices are the nonzero, non-dense classes, labelled by support.
SimpleGraph quotient_graph(const QuotientPoset& q);

// Base element index of each vertex of zdg(p) / zdg_star(p).
std::vector<int> zdg_vertices(const FinitePoset& p);
std::vector<int> zdg_star_vertices(const FinitePoset& p);
// Class index of each vertex of quotient_graph(q).
std::vector<int> quotient_graph_classes(const QuotientPoset& q);

}  // namespace zdg
