#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/analysis.hpp"
#include "zdg/quotient.hpp"
#include "zdg/zdg.hpp"

using namespace zdg;

namespace {

bool is_elimination_order(const SimpleGraph& g, const std::vector<int>& order)
{
    // Later neighbours of each vertex must form a clique.
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    for (int v : order) {
        std::vector<int> later;
        for (int w = 0; w < g.order(); ++w)
            if (g.adjacent(v, w) && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) return false;
    }
    return static_cast<int>(order.size()) == g.order();
}

}  // namespace

TEST_CASE("chordality with witnesses")
{
    const auto c4 = chordality(cycle_graph(4));
    CHECK_FALSE(c4.chordal);
    CHECK(oracle::is_induced_cycle(cycle_graph(4), c4.chordless_cycle));
    CHECK(is_chordal(zdg::zdg(make_boolean(3))));
    CHECK_FALSE(is_chordal(zdg::zdg(make_chain_product({3, 3}))));
    CHECK(is_chordal(SimpleGraph()));
    CHECK(lex_bfs(path_graph(3)).size() == 3);
}

TEST_CASE("chordality agrees with brute force on random graphs")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 11), trial % 3 == 0 ? 0.7 : 0.4);
        const auto r = chordality(g);
        REQUIRE(r.chordal == oracle::chordal(g));
        if (r.chordal) CHECK(is_elimination_order(g, r.elimination_order));
        else {
            CHECK(r.chordless_cycle.size() >= 4);
            CHECK(oracle::is_induced_cycle(g, r.chordless_cycle));
        }
    }
}

TEST_CASE("odd holes and perfectness")
{
    const auto c5 = find_induced_odd_hole(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK(*c5 == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_FALSE(is_perfect(cycle_graph(5)));
    CHECK_FALSE(is_perfect(cycle_graph(7)));
    CHECK_FALSE(is_perfect(complement(cycle_graph(7))));
    CHECK(is_perfect(cycle_graph(6)));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) CHECK(is_perfect(complete_bipartite(m, n)));

    CHECK(is_perfect(zdg::zdg(make_boolean(4))));
    CHECK_FALSE(is_perfect(zdg::zdg(make_boolean(5))));

    const auto q4 = quotient(make_boolean(4));
    CHECK_FALSE(find_induced_odd_hole(quotient_graph(q4)).has_value());

    // Quotient graph of 2^5: some induced 5-cycle, and the named one is induced.
    const auto q5 = quotient(make_boolean(5));
    const auto qg = quotient_graph(q5);
    const auto hole = find_induced_odd_hole(qg);
    REQUIRE(hole.has_value());
    CHECK(hole->size() == 5);
    CHECK(oracle::is_induced_cycle(qg, *hole));
    std::vector<int> named;
    for (const char* l : {"P_14", "P_25", "P_13", "P_24", "P_35"}) {
        const auto it = std::find(qg.labels().begin(), qg.labels().end(), l);
        REQUIRE(it != qg.labels().end());
        named.push_back(static_cast<int>(it - qg.labels().begin()));
    }
    CHECK(oracle::is_induced_cycle(qg, named));
}

TEST_CASE("odd holes and perfectness agree with brute force")
{
    std::mt19937 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto g = oracle::random_graph(rng, n, 0.5);
        const auto hole = find_induced_odd_hole(g);
        REQUIRE(hole.has_value() == oracle::has_odd_hole(g));
        if (hole) {
            CHECK(hole->size() % 2 == 1);
            CHECK(oracle::is_induced_cycle(g, *hole));
        }
        CHECK(is_perfect(g) == oracle::perfect_by_definition(g));
    }
}

TEST_CASE("clique, independence and chromatic numbers")
{
    CHECK(clique_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(SimpleGraph()) == 0);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.45);
        CHECK(clique_number(g) == oracle::clique_number(g));
        CHECK(independence_number(g) == oracle::independence_number(g));
        const auto c = chromatic(g);
        CHECK(c.value == oracle::chromatic_number(g));
        CHECK(check_coloring(g, c.assignment).valid);
        CHECK(c.assignment.colors_used() == c.value);
    }
}

TEST_CASE("edge chromatic numbers")
{
    CHECK(edge_chromatic_number(complete_graph(3)) == 3);
    CHECK(edge_chromatic_number(complete_graph(4)) == 3);
    CHECK(edge_chromatic_number(complete_bipartite(2, 3)) == 3);
    for (int n = 2; n <= 7; ++n) CHECK(edge_chromatic_number(complete_graph(n)) == (n % 2 == 1 ? n : n - 1));
    CHECK(edge_class(cycle_graph(5)) == EdgeClass::two);
    CHECK(edge_class(cycle_graph(6)) == EdgeClass::one);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
        const auto e = edge_chromatic(g);
        CHECK(e.value == oracle::chromatic_number(oracle::line_graph(g)));
        CHECK(check_coloring(g, e.assignment).valid);
    }
}

TEST_CASE("total chromatic numbers of complete and complete bipartite graphs")
{
    for (int n = 1; n <= 7; ++n) CHECK(total_chromatic_number(complete_graph(n)) == (n % 2 == 1 ? n : n + 1));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(total_chromatic_number(complete_bipartite(m, n)) == std::max(m, n) + 1 + (m == n ? 1 : 0));
    CHECK(total_chromatic_number(SimpleGraph()) == 0);
}

TEST_CASE("total coloring agrees with the total graph's chromatic number")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        const auto t = total_coloring(g);
        REQUIRE(t.exact);
        CHECK(t.upper == oracle::chromatic_number(oracle::total_graph(g)));
        CHECK(check_coloring(g, t.assignment).valid);
        CHECK(verify_tcc(g));
    }
}

TEST_CASE("size cap refusal carries a greedy fallback")
{
    const auto big = complete_bipartite(8, 9);
    SearchLimits limits;
    limits.max_vertices = 10;
    const auto r = total_coloring(big, limits);
    CHECK_FALSE(r.exact);
    CHECK(r.lower == big.max_degree() + 1);
    CHECK(check_coloring(big, r.assignment).valid);
    try {
        total_chromatic_number(big, limits);
        FAIL("no refusal");
    } catch (const SizeCapRefusal& e) {
        CHECK(check_coloring(big, e.fallback().assignment).valid);
    }
}

TEST_CASE("coloring checker rejects conflicts")
{
    const auto g = path_graph(3);
    ColoringAssignment a;
    a.kind = ColoringAssignment::Kind::total;
    a.vertex_color = {0, 1, 0};
    a.edge_color = {{{0, 1}, 2}, {{1, 2}, 2}};
    a.color_count = 3;
    CHECK_FALSE(check_coloring(g, a).valid);
    a.edge_color[{1, 2}] = 0;
    CHECK_FALSE(check_coloring(g, a).valid);  // edge 1-2 meets vertex 2 colored 0
    a.vertex_color = {0, 1, 2};
    a.edge_color = {{{0, 1}, 2}, {{1, 2}, 0}};
    CHECK(check_coloring(g, a).valid);
    ColoringAssignment v;
    v.vertex_color = {0, 0, 1};
    v.color_count = 2;
    CHECK_FALSE(check_coloring(g, v).valid);
}

TEST_CASE("type classification of chain products")
{
    CHECK(classify_type({3, 3}) == TotalType::two);
    CHECK(classify_type({2, 3}) == TotalType::one);
    CHECK(classify_type({2, 2, 2}) == TotalType::one);
    CHECK(classify_type(make_chain_product({4, 4})) == TotalType::two);
    CHECK_THROWS_AS(classify_type(std::vector<int>{3}), InputError);
    CHECK_THROWS_AS(classify_type(make_atom_coatom_poset(4)), InputError);
}

TEST_CASE("independent set and density bounds")
{
    CHECK(independent_set_bound_check(zdg::zdg(make_chain_product({3, 3}))));
    CHECK(independent_set_bound_check(make_chain_product({3, 3})));
    CHECK(independent_set_bound_check(complete_graph(2)));
    const auto t444 = make_three_atom_chain_poset({4, 4, 4}, {4, 4, 4});
    const auto g = zdg::zdg(t444);
    CHECK(g.order() == 24);
    CHECK(g.max_degree() == 12);
    CHECK(independent_set_bound_check(t444));
    CHECK_FALSE(density_bound_check(g));
    CHECK(complement(g).max_degree() == 19);
    CHECK(density_bound_check(complement(g)));
    CHECK(density_bound_check(complete_graph(5)));
}
