#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace zdg::detail {

// Per graph vertex: the elements (its own vertex element and incident edge
// elements) whose colors must be pairwise distinct, and how many of the k
// colors may be absent there. Lets the search reject a color that can no
// longer reach every vertex with zero slack.
struct CoverModel {
    std::vector<std::vector<int>> star;
    std::vector<int> slack;
    std::vector<std::array<int, 2>> ends;  // graph vertices an element touches; -1 pads
};

// DSATUR backtracking for a proper k-coloring of a conflict graph over
// abstract elements. New colors are only opened in increasing order.
// run() restarts with doubling node caps and seeded tie-breaking; a run that
// ends under its cap was exhaustive, so a negative answer is still a proof.
class ColorSearch {
public:
    ColorSearch(std::vector<std::vector<int>> conflicts, int k);

    void set_cover(CoverModel m);

    // Colors per element, or nullopt when infeasible or the limit was hit.
    std::optional<std::vector<int>> run(long long node_limit = 0);
    bool hit_limit() const noexcept { return hit_limit_; }
    long long nodes() const noexcept { return nodes_; }

private:
    bool assign(int e, int c);
    void undo();
    bool cover_ok(int e, int c, std::uint64_t options);
    bool cover_color_ok(int c);
    bool needy(int v, int c) const;
    int choose() const;
    bool recurse();
    std::optional<std::vector<int>> attempt(unsigned seed, long long cap);

    std::vector<std::vector<int>> conf_;
    int k_;
    std::vector<int> static_degree_;
    std::vector<int> priority_;  // tie-break among equal DSATUR keys
    bool shuffle_values_ = false;
    std::mt19937 rng_;
    std::vector<int> color_;
    std::vector<std::uint64_t> dom_;
    std::vector<std::pair<int, std::uint64_t>> trail_;
    std::vector<std::size_t> marks_;
    std::vector<int> assigned_;
    std::vector<int> max_used_;
    std::optional<CoverModel> cover_;
    std::vector<std::uint64_t> present_;
    long long nodes_ = 0;
    long long limit_ = 0;
    bool hit_limit_ = false;
};

// Edmonds' blossom algorithm on at most 64 vertices given as adjacency masks.
bool has_perfect_matching(const std::vector<std::uint64_t>& adj);

}  // namespace zdg::detail
