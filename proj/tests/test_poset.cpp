#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/graph.hpp"
#include "zdg/poset.hpp"

using namespace zdg;

namespace {

int idx(const FinitePoset& p, const std::string& label)
{
    const auto i = p.index_of(label);
    REQUIRE_MESSAGE(i.has_value(), "no element " << label);
    return *i;
}

ElementSet set_of(const FinitePoset& p, std::initializer_list<const char*> labels)
{
    ElementSet s = p.empty_set();
    for (const char* l : labels) s.set(static_cast<std::size_t>(idx(p, l)));
    return s;
}

std::set<std::string> labels_of(const FinitePoset& p, const ElementSet& s)
{
    std::set<std::string> out;
    for (int i : members(s)) out.insert(p.label(i));
    return out;
}

using Labels = std::set<std::string>;

FinitePoset diamond()
{
    return FinitePoset::from_covers("M3", {"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("construction checks")
{
    CHECK_THROWS_AS(FinitePoset::from_covers("x", {"a", "a"}, {{0, 1}}), InputError);
    CHECK_THROWS_AS(FinitePoset::from_covers("x", {"a", "b"}, {{0, 0}}), InputError);
    CHECK_THROWS_AS(FinitePoset::from_covers("x", {"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}), InputError);
    CHECK_THROWS_AS(FinitePoset::from_covers("x", {"a", "b", "c"}, {{0, 1}}), InputError);  // no least element
    CHECK_THROWS_AS(FinitePoset::from_covers("x", {"a", "b"}, {{0, 5}}), InputError);
    CHECK_THROWS_AS(FinitePoset::from_covers("x", {}, {}), InputError);

    const auto c = make_chain(1);
    CHECK(c.size() == 1);
    CHECK(make_boolean(0).size() == 1);
    const auto b3 = make_boolean(3);
    CHECK(b3.size() == 8);
    CHECK(atoms(b3).count() == 3);
    CHECK(b3.is_partial_order());
    CHECK(make_chain_product({3, 3}).size() == 9);
    CHECK(make_divisor_lattice(12).size() == 6);
    CHECK(make_atom_coatom_poset(4).size() == 10);
}

TEST_CASE("transitive closure of redundant covers")
{
    const auto p = FinitePoset::from_covers("x", {"0", "a", "b"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.le(0, 2));
    CHECK(p.covers() == std::vector<FinitePoset::Cover>{{0, 1}, {1, 2}});
}

TEST_CASE("cones")
{
    const auto b2 = make_boolean(2);
    CHECK(labels_of(b2, upper_cone(b2, set_of(b2, {"{1}", "{2}"}))) == Labels{"{1,2}"});
    CHECK(labels_of(b2, lower_cone(b2, set_of(b2, {"{1}", "{2}"}))) == Labels{"0"});

    const auto c3 = make_chain(3);
    CHECK(labels_of(c3, upper_cone(c3, set_of(c3, {"0"}))) == Labels{"0", "1", "2"});
    CHECK(labels_of(c3, lower_cone(c3, set_of(c3, {"2"}))) == Labels{"0", "1", "2"});

    const auto f1 = make_atom_coatom_poset(4);
    CHECK(labels_of(f1, upper_cone(f1, set_of(f1, {"q1", "q2"}))) == Labels{"q3*", "q4*", "1"});
    CHECK(labels_of(f1, lower_cone(f1, set_of(f1, {"q1*", "q2*"}))) == Labels{"0", "q3", "q4"});

    CHECK_THROWS_AS(upper_cone(c3, c3.empty_set()), std::invalid_argument);
    CHECK_THROWS_AS(lower_cone(c3, c3.empty_set()), std::invalid_argument);
}

TEST_CASE("annihilators, atoms, zero divisors")
{
    const auto b3 = make_boolean(3);
    CHECK(labels_of(b3, annihilator(b3, set_of(b3, {"{1}"}))) == Labels{"0", "{2}", "{3}", "{2,3}"});
    CHECK(annihilator(b3, set_of(b3, {"0"})).count() == b3.size());
    CHECK(zero_divisors(b3).count() == 7);

    const auto f1 = make_atom_coatom_poset(4);
    CHECK(labels_of(f1, annihilator(f1, set_of(f1, {"q1"}))) == Labels{"0", "q2", "q3", "q4", "q1*"});
    CHECK(labels_of(f1, atoms(f1)) == Labels{"q1", "q2", "q3", "q4"});

    const auto c32 = make_chain_product({3, 2});
    CHECK(labels_of(c32, atoms(c32)) == Labels{"(1,0)", "(0,1)"});
    CHECK(labels_of(c32, zero_divisors(c32)) == Labels{"(0,0)", "(1,0)", "(2,0)", "(0,1)"});
    CHECK(labels_of(make_chain(4), zero_divisors(make_chain(4))) == Labels{"0"});
}

TEST_CASE("0-distributivity and pseudocomplements")
{
    for (int n = 0; n <= 4; ++n) CHECK(is_zero_distributive(make_boolean(n)));
    CHECK_FALSE(is_zero_distributive(diamond()));
    CHECK(is_zero_distributive(make_atom_coatom_poset(4)));

    const auto b3 = make_boolean(3);
    CHECK(pseudocomplement(b3, idx(b3, "{1}")) == idx(b3, "{2,3}"));
    const auto f1 = make_atom_coatom_poset(4);
    CHECK(pseudocomplement(f1, idx(f1, "q1")) == idx(f1, "q1*"));
    const auto m3 = diamond();
    CHECK_FALSE(pseudocomplement(m3, idx(m3, "a")).has_value());
}

TEST_CASE("SSC, Boolean recognition, duals, products")
{
    CHECK(is_ssc(make_boolean(3)));
    CHECK_FALSE(is_ssc(make_chain(3)));
    CHECK(is_boolean(make_boolean(4)) == BooleanCheck::boolean);
    CHECK(is_boolean(make_chain(3)) == BooleanCheck::not_boolean);
    CHECK(is_boolean(make_chain_product({3, 3})) == BooleanCheck::not_boolean);
    const auto bowtie = FinitePoset::from_covers("bowtie", {"0", "a", "b", "c", "d"},
                                                 {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(is_boolean(bowtie) == BooleanCheck::not_a_lattice);

    auto cover_graph = [](const FinitePoset& p) {
        SimpleGraph g(static_cast<int>(p.size()));
        for (auto [a, b] : p.covers()) g.add_edge(a, b);
        return g;
    };
    CHECK(oracle::isomorphic(cover_graph(dual(make_chain(3))), cover_graph(make_chain(3))));
    CHECK(oracle::isomorphic(cover_graph(dual(make_boolean(3))), cover_graph(make_boolean(3))));
    CHECK(oracle::isomorphic(cover_graph(dual(make_chain_product({3, 2}))), cover_graph(make_chain_product({3, 2}))));
    CHECK_THROWS_AS(dual(FinitePoset::from_covers("v", {"0", "a", "b"}, {{0, 1}, {0, 2}})), InputError);

    CHECK(is_boolean(make_chain_product({2, 2})) == BooleanCheck::boolean);
    CHECK(is_boolean(make_chain_product({2, 2, 2})) == BooleanCheck::boolean);
    CHECK(make_chain_product({3, 2}).size() == 6);
}

TEST_CASE("cones, annihilators and atoms agree with brute force on random posets")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto p = oracle::random_poset(rng, n, 0.35);
        REQUIRE(p.is_partial_order());
        CHECK(oracle::to_set(atoms(p)) == oracle::atoms(p));
        CHECK(oracle::to_set(zero_divisors(p)) == oracle::zero_divisors(p));
        CHECK(is_zero_distributive(p) == oracle::zero_distributive(p));
        for (int a = 0; a < n; ++a) {
            const auto pc = pseudocomplement(p, a);
            CHECK(pc.value_or(-1) == oracle::pseudocomplement(p, a));
            for (int b = a; b < n; ++b) {
                const auto s = make_set(p.size(), {a, b});
                const oracle::Set os{a, b};
                CHECK(oracle::to_set(upper_cone(p, s)) == oracle::upper_cone(p, os));
                CHECK(oracle::to_set(lower_cone(p, s)) == oracle::lower_cone(p, os));
                CHECK(oracle::to_set(annihilator(p, s)) == oracle::annihilator(p, os));
            }
        }
    }
}
