#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zdg/poset.hpp"

namespace zdg {

class SimpleGraph {
public:
    using Edge = std::pair<int, int>;

    SimpleGraph() = default;
    // Vertices labelled "v0", "v1", ...
    explicit SimpleGraph(int n);
    explicit SimpleGraph(std::vector<std::string> labels);
    SimpleGraph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    int order() const noexcept { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }

    bool adjacent(int u, int v) const
    {
        return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }
    const Bits& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }
    int max_degree() const;

    void add_edge(int u, int v);

    // Pairs (u,v) with u < v, ascending.
    std::vector<Edge> edges() const;

    SimpleGraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b)
    {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Bits> adj_;
    std::size_t edge_count_ = 0;
};

SimpleGraph complete_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_bipartite(int m, int n);

SimpleGraph complement(const SimpleGraph& g);
// Right-hand labels that collide with left-hand ones get a "'" suffix.
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

// Twins that are adjacent with N(u)\{v} = N(v)\{u}.
SimpleGraph reduce_simeq(const SimpleGraph& g);
// Twins with N(u) = N(v).
SimpleGraph reduce_theta(const SimpleGraph& g);

// Class index per vertex for the two twin relations; classes numbered by
// smallest member.
std::vector<int> simeq_classes(const SimpleGraph& g);
std::vector<int> theta_classes(const SimpleGraph& g);

inline constexpr int max_canonical_order = 16;

// Lexicographically least adjacency certificate over all vertex orders.
// Labels are ignored. Throws std::invalid_argument above max_canonical_order.
std::vector<std::uint16_t> canonical_form(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace zdg
