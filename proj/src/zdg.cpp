#include "zdg/zdg.hpp"

namespace zdg {

namespace {

SimpleGraph disjointness_graph(const FinitePoset& p, const std::vector<int>& vs)
{
    std::vector<std::string> labels;
    for (int v : vs) labels.push_back(p.label(v));
    SimpleGraph g(std::move(labels));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (p.disjoint(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

}  // namespace

std::vector<int> zdg_vertices(const FinitePoset& p)
{
    auto z = zero_divisors(p);
    z.reset(static_cast<std::size_t>(p.zero()));
    return members(z);
}

std::vector<int> zdg_star_vertices(const FinitePoset& p)
{
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
        if (x != p.zero() && (!p.one() || x != *p.one())) out.push_back(x);
    return out;
}

SimpleGraph zdg(const FinitePoset& p) { return disjointness_graph(p, zdg_vertices(p)); }

SimpleGraph zdg_star(const FinitePoset& p) { return disjointness_graph(p, zdg_star_vertices(p)); }

std::vector<int> quotient_graph_classes(const QuotientPoset& q)
{
    const auto dense = q.dense_class();
    std::vector<int> out;
    for (int c = 1; c < static_cast<int>(q.class_count()); ++c)
        if (!dense || c != *dense) out.push_back(c);
    return out;
}

SimpleGraph quotient_graph(const QuotientPoset& q)
{
    const auto cs = quotient_graph_classes(q);
    std::vector<std::string> labels;
    for (int c : cs) labels.push_back(q.label(c));
    SimpleGraph g(std::move(labels));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (classes_adjacent(q, cs[i], cs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

}  // namespace zdg
