#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "zdg/coloring.hpp"
#include "zdg/graph.hpp"
#include "zdg/poset.hpp"

namespace zdg {

// Visit order of lexicographic breadth-first search, ties to lowest index.
std::vector<int> lex_bfs(const SimpleGraph& g);

struct ChordalityResult {
    bool chordal = true;
    std::vector<int> elimination_order;  // perfect elimination order when chordal
    std::vector<int> chordless_cycle;    // cycle of length >= 4 otherwise
};

ChordalityResult chordality(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);

// Smallest induced odd cycle of length >= 5, starting at its least vertex and
// continuing towards the smaller of that vertex's two cycle neighbours.
std::optional<std::vector<int>> find_induced_odd_hole(const SimpleGraph& g);
bool is_perfect(const SimpleGraph& g);

std::vector<int> maximum_clique(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);
int independence_number(const SimpleGraph& g);

struct ExactColoring {
    int value = 0;
    ColoringAssignment assignment;
};

ExactColoring chromatic(const SimpleGraph& g);
int chromatic_number(const SimpleGraph& g);

enum class EdgeClass { one, two };
ExactColoring edge_chromatic(const SimpleGraph& g);
int edge_chromatic_number(const SimpleGraph& g);
EdgeClass edge_class(const SimpleGraph& g);

struct SearchLimits {
    int max_vertices = 14;
    int max_edges = 40;
};

struct TotalColoringResult {
    bool exact = false;
    int lower = 0;  // chi'' >= lower
    int upper = 0;  // chi'' <= upper, witnessed by assignment
    ColoringAssignment assignment;
};

// Exact within the limits; above them the greedy upper bound is returned with
// exact = false and lower = Delta + 1.
TotalColoringResult total_coloring(const SimpleGraph& g, const SearchLimits& limits = {});

class SizeCapRefusal : public std::runtime_error {
public:
    explicit SizeCapRefusal(TotalColoringResult fallback);
    const TotalColoringResult& fallback() const noexcept { return fallback_; }

private:
    TotalColoringResult fallback_;
};

// Throws SizeCapRefusal above the limits.
int total_chromatic_number(const SimpleGraph& g, const SearchLimits& limits = {});

// Backtracking search for a total coloring with exactly k colors available.
// Gives up after node_limit search nodes (0 = unlimited).
std::optional<ColoringAssignment> find_total_coloring(const SimpleGraph& g, int k, long long node_limit = 0);
ColoringAssignment greedy_total_coloring(const SimpleGraph& g);

bool verify_tcc(const SimpleGraph& g, const SearchLimits& limits = {});

enum class TotalType { one, two };
// Type of G(P) for a product of chains with the given element counts (at
// least two factors).
TotalType classify_type(const std::vector<int>& chain_sizes);
// Same, reading the factor sizes off the atom classes of a poset whose
// quotient is Boolean.
TotalType classify_type(const FinitePoset& p);

// |X| >= N - Delta - 1 for a maximum independent set X.
bool independent_set_bound_check(const SimpleGraph& g);
// Same bound, witnessed by an atom cone q^u cut down to the vertices of G(P).
bool independent_set_bound_check(const FinitePoset& p);
// Delta >= 3/4 |V|.
bool density_bound_check(const SimpleGraph& g);

}  // namespace zdg
