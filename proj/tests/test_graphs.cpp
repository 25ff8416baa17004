#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zdg/analysis.hpp"
#include "zdg/io.hpp"
#include "zdg/quotient.hpp"
#include "zdg/zdg.hpp"

using namespace zdg;

namespace {

std::vector<int> degrees(const SimpleGraph& g)
{
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

SimpleGraph triangle_with_pendants()
{
    return SimpleGraph({"a", "b", "c", "x", "y", "z"}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("zero-divisor graphs of small posets")
{
    CHECK(isomorphic(zdg::zdg(make_chain_product({2, 2})), complete_graph(2)));

    const auto g = zdg::zdg(make_boolean(3));
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(isomorphic(g, triangle_with_pendants()));

    CHECK(isomorphic(zdg::zdg(make_chain_product({3, 3})), complete_bipartite(2, 2)));
    CHECK(zdg::zdg(make_chain(4)).order() == 0);
}

TEST_CASE("zdg_star keeps dense elements other than the top")
{
    const auto c4 = zdg_star(make_chain(4));
    CHECK(c4.order() == 2);
    CHECK(c4.edge_count() == 0);
    CHECK(zdg_star(make_boolean(3)) == zdg::zdg(make_boolean(3)));
    CHECK(isomorphic(zdg_star(make_chain_product({3, 3})), disjoint_union(complete_bipartite(2, 2), empty_graph(3))));
}

TEST_CASE("complement, join, disjoint union")
{
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    CHECK(isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto g = oracle::random_graph(rng, 7, 0.4);
        CHECK(complement(complement(g)) == g);
    }
    CHECK(isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
    CHECK(isomorphic(join(empty_graph(2), empty_graph(2)), complete_bipartite(2, 2)));
    CHECK(isomorphic(disjoint_union(complete_graph(1), complete_graph(1)), empty_graph(2)));
    const auto u = disjoint_union(SimpleGraph({"a"}), SimpleGraph({"a"}));
    CHECK(u.label(1) == "a'");
}

TEST_CASE("G*c(P) is the join of Gc(P) with a clique on the extra dense elements")
{
    for (const std::vector<int>& sizes : std::vector<std::vector<int>>{{3, 3}, {2, 4}, {3, 2, 2}}) {
        const auto p = make_chain_product(sizes);
        const int m = zdg_star(p).order() - zdg::zdg(p).order();
        CHECK(isomorphic(complement(zdg_star(p)), join(complement(zdg::zdg(p)), complete_graph(m))));
    }
}

TEST_CASE("quotient graphs")
{
    CHECK(isomorphic(quotient_graph(quotient(make_boolean(3))), zdg::zdg(make_boolean(3))));
    const auto q33 = quotient_graph(quotient(make_chain_product({3, 3})));
    CHECK(q33.order() == 2);
    CHECK(q33.edge_count() == 1);
    const auto q4 = quotient_graph(quotient(make_boolean(4)));
    CHECK(q4.order() == 14);
}

TEST_CASE("twin reductions")
{
    CHECK(reduce_simeq(complete_graph(5)).order() == 1);
    CHECK(reduce_simeq(empty_graph(4)).order() == 4);
    // Isolated vertices share the empty neighbourhood.
    CHECK(reduce_theta(empty_graph(4)).order() == 1);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) CHECK(isomorphic(reduce_theta(complete_bipartite(m, n)), complete_graph(2)));

    for (const std::vector<int>& sizes : std::vector<std::vector<int>>{{3, 3}, {2, 3, 4}, {4, 4}, {3, 3, 3}}) {
        const auto p = make_chain_product(sizes);
        const auto qg = quotient_graph(quotient(p));
        CHECK(isomorphic(reduce_theta(zdg::zdg(p)), qg));
        CHECK(isomorphic(reduce_simeq(complement(zdg::zdg(p))), complement(qg)));
    }
}

TEST_CASE("twin classes agree with brute-force neighbourhood comparison")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.5);
        const auto s = simeq_classes(g);
        const auto t = theta_classes(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                if (u == v) continue;
                bool open_equal = true, closed_equal = g.adjacent(u, v);
                for (int w = 0; w < g.order(); ++w) {
                    open_equal = open_equal && g.adjacent(u, w) == g.adjacent(v, w);
                    if (w != u && w != v) closed_equal = closed_equal && g.adjacent(u, w) == g.adjacent(v, w);
                }
                CHECK((t[static_cast<std::size_t>(u)] == t[static_cast<std::size_t>(v)]) == open_equal);
                CHECK((s[static_cast<std::size_t>(u)] == s[static_cast<std::size_t>(v)]) == closed_equal);
            }
    }
}

TEST_CASE("zdg matches the definition on random posets")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = oracle::random_poset(rng, 2 + static_cast<int>(rng() % 10), 0.3);
        const auto a = oracle::labelled(zdg::zdg(p));
        const auto b = oracle::zdg(p);
        CHECK(a.vertices == b.vertices);
        CHECK(a.edges == b.edges);
    }
}

TEST_CASE("zdg diameter is at most three")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = zdg::zdg(oracle::random_poset(rng, 3 + static_cast<int>(rng() % 9), 0.3));
        const int n = g.order();
        // Floyd-Warshall on the connected graph.
        std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1 << 20));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = u == v ? 0 : g.adjacent(u, v) ? 1 : 1 << 20;
        for (int k = 0; k < n; ++k)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                        std::min(d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)],
                                 d[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] +
                                     d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) CHECK(d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= 3);
    }
}

TEST_CASE("canonical form isomorphism agrees with permutation search")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto g = oracle::random_graph(rng, n, 0.5);
        // Half the time compare against a relabelled copy.
        SimpleGraph h;
        if (trial % 2 == 0) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            h = SimpleGraph(n);
            for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        } else {
            h = oracle::random_graph(rng, n, 0.5);
        }
        const bool iso = oracle::isomorphic(g, h);
        CHECK(isomorphic(g, h) == iso);
        if (iso) CHECK(degrees(g) == degrees(h));
    }
    CHECK_THROWS_AS(canonical_form(empty_graph(max_canonical_order + 1)), std::invalid_argument);
}

TEST_CASE("JSON round trips and diagnostics")
{
    const auto p = make_atom_coatom_poset(3);
    const auto back = poset_from_json(poset_to_json(p));
    CHECK(back.labels() == p.labels());
    CHECK(back.covers() == p.covers());
    CHECK(document_kind(poset_to_json(p)) == DocumentKind::poset);

    const auto g = triangle_with_pendants();
    const auto gj = graph_to_json(g, "T");
    CHECK(graph_from_json(gj) == g);
    CHECK(document_kind(gj) == DocumentKind::graph);
    CHECK(graph_from_json(R"({"name":"x","elements":["a","b"],"edges":[[0,1]]})").edge_count() == 1);

    try {
        poset_from_json("{\"name\": \"x\",\n");
        FAIL("malformed JSON accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(poset_from_json(R"({"name":"x","elements":["a","b"],"covers":[[0,7]]})"), InputError);
    CHECK_THROWS_AS(graph_from_json(R"({"name":"x","vertices":["a"],"edges":[[0,0]]})"), InputError);
}

TEST_CASE("DOT export")
{
    const auto dot = to_dot(triangle_with_pendants());
    std::size_t edges = 0, pos = 0;
    while ((pos = dot.find("--", pos)) != std::string::npos) ++edges, ++pos;
    CHECK(edges == 6);
    for (const char* v : {"\"a\";", "\"x\";", "\"z\";"}) CHECK(dot.find(v) != std::string::npos);
    CHECK(to_dot(SimpleGraph()) == "graph G { }\n");
    const auto k22 = to_dot(complete_bipartite(2, 2));
    pos = 0;
    edges = 0;
    while ((pos = k22.find("--", pos)) != std::string::npos) ++edges, ++pos;
    CHECK(edges == 4);
}
