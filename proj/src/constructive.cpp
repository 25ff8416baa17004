#include "zdg/constructive.hpp"

#include <algorithm>
#include <numeric>

#include "zdg/analysis.hpp"
#include "zdg/quotient.hpp"
#include "zdg/zdg.hpp"

namespace zdg {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

SimpleGraph::Edge key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

int behzad_palette(int n) { return n % 2 ? n : n + 1; }

struct Setup {
    QuotientPoset q;
    SimpleGraph gc;
    std::vector<int> vertex_of;  // base element -> gc vertex, -1 if none
};

Setup setup(const FinitePoset& p, int atom_count)
{
    Setup s{quotient(p), complement(zdg(p)), std::vector<int>(p.size(), -1)};
    if (s.q.atom_count() != atom_count)
        throw ConstructionRefused("expected " + std::to_string(atom_count) + " atoms, found " +
                                  std::to_string(s.q.atom_count()));
    if (!is_zero_distributive(p)) throw ConstructionRefused("poset is not 0-distributive");
    const auto vs = zdg_vertices(p);
    for (std::size_t i = 0; i < vs.size(); ++i) s.vertex_of[ix(vs[i])] = static_cast<int>(i);
    return s;
}

std::vector<int> class_vertices(const Setup& s, int c)
{
    std::vector<int> out;
    for (int x : s.q.cls(c).members) out.push_back(s.vertex_of[ix(x)]);
    return out;
}

int class_with_complement_of(const QuotientPoset& q, int k)
{
    Support target(ix(q.atom_count()));
    target.set();
    target.reset(ix(k));
    const auto c = q.find_class(target);
    if (!c || *c == 0) throw ConstructionRefused("class " + support_label(target) + " is empty");
    return *c;
}

void certify(const SimpleGraph& g, const ColoringAssignment& a, const std::string& what)
{
    const auto check = check_coloring(g, a);
    if (!check.valid) throw std::logic_error(what + " produced an invalid coloring: " + check.reason);
}

}  // namespace

std::string path_name(ConstructionPath p)
{
    switch (p) {
    case ConstructionPath::two_atoms: return "two-atoms";
    case ConstructionPath::three_atoms: return "three-atoms";
    case ConstructionPath::density_search: return "density-search";
    }
    return "?";
}

ColoringAssignment complete_graph_total_coloring(int n)
{
    ColoringAssignment a;
    a.kind = ColoringAssignment::Kind::total;
    const int r = behzad_palette(n);
    a.color_count = n == 0 ? 0 : r;
    for (int i = 0; i < n; ++i) {
        a.vertex_color.push_back((2 * i) % r);
        for (int j = i + 1; j < n; ++j) a.edge_color[{i, j}] = (i + j) % r;
    }
    return a;
}

ColoringAssignment complement_total_coloring_two_atoms(const FinitePoset& p)
{
    const auto s = setup(p, 2);
    ColoringAssignment a;
    a.kind = ColoringAssignment::Kind::total;
    a.vertex_color.assign(ix(s.gc.order()), -1);
    for (int k = 0; k < 2; ++k) {
        const auto vs = class_vertices(s, s.q.atom_class(k));
        const auto kn = complete_graph_total_coloring(static_cast<int>(vs.size()));
        a.color_count = std::max(a.color_count, kn.color_count);
        for (std::size_t i = 0; i < vs.size(); ++i) a.vertex_color[ix(vs[i])] = kn.vertex_color[i];
        for (const auto& [e, c] : kn.edge_color) a.edge_color[key(vs[ix(e.first)], vs[ix(e.second)])] = c;
    }
    certify(s.gc, a, "two-atom construction");
    return a;
}

ThreeAtomClassSizes three_atom_class_sizes(const FinitePoset& p)
{
    const auto s = setup(p, 3);
    ThreeAtomClassSizes out;
    for (int k = 0; k < 3; ++k) {
        out.l.push_back(static_cast<int>(s.q.cls(s.q.atom_class(k)).members.size()));
        out.m.push_back(static_cast<int>(s.q.cls(class_with_complement_of(s.q, k)).members.size()));
    }
    out.vertices = s.gc.order();
    return out;
}

bool three_atom_hypothesis(const ThreeAtomClassSizes& s)
{
    return std::all_of(s.l.begin(), s.l.end(), [&](int l) { return 4 * l >= s.vertices; });
}

ColoringAssignment complement_total_coloring_three_atoms(const FinitePoset& p)
{
    const auto s = setup(p, 3);
    const auto sizes = three_atom_class_sizes(p);
    for (int k = 0; k < 3; ++k)
        if (4 * sizes.l[ix(k)] < sizes.vertices)
            throw ConstructionRefused("hypothesis l_i >= |V|/4 fails for atom " + std::to_string(k + 1) + ": " +
                                      std::to_string(sizes.l[ix(k)]) + " < " + std::to_string(sizes.vertices) + "/4");

    // Relabel atoms so that l1 <= l2 <= l3.
    std::vector<int> perm{0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return sizes.l[ix(a)] < sizes.l[ix(b)]; });
    std::vector<std::vector<int>> q(3), star(3);
    for (int i = 0; i < 3; ++i) {
        q[ix(i)] = class_vertices(s, s.q.atom_class(perm[ix(i)]));
        star[ix(i)] = class_vertices(s, class_with_complement_of(s.q, perm[ix(i)]));
    }
    const int l1 = static_cast<int>(q[0].size());
    const int l2 = static_cast<int>(q[1].size());
    const int m1 = static_cast<int>(star[0].size());
    const int m2 = static_cast<int>(star[1].size());
    const int m3 = static_cast<int>(star[2].size());
    if (!(l1 <= l2 && l2 <= static_cast<int>(q[2].size())))
        throw ConstructionRefused("atom classes could not be sorted by size");
    if (l2 < m1 + m3) throw ConstructionRefused("|[q2]| < |[q1]*| + |[q3]*|");
    if (l1 < m2) throw ConstructionRefused("|[q1]| < |[q2]*|");

    ColoringAssignment a;
    a.kind = ColoringAssignment::Kind::total;
    a.vertex_color.assign(ix(s.gc.order()), -1);

    // Step 1: K_r on [q1]* u [q2]* u [q3]* u [q3], restricted to G^c's edges.
    std::vector<int> clique;
    for (int i = 0; i < 3; ++i) clique.insert(clique.end(), star[ix(i)].begin(), star[ix(i)].end());
    clique.insert(clique.end(), q[2].begin(), q[2].end());
    const int r = static_cast<int>(clique.size());
    const int pal = behzad_palette(r);
    std::vector<int> slot(ix(s.gc.order()), -1);
    for (int i = 0; i < r; ++i) slot[ix(clique[ix(i)])] = i;
    auto kr_edge = [&](int u, int v) { return (slot[ix(u)] + slot[ix(v)]) % pal; };
    for (int i = 0; i < r; ++i) {
        const int u = clique[ix(i)];
        a.vertex_color[ix(u)] = (2 * i) % pal;
        for (int j = i + 1; j < r; ++j) {
            const int v = clique[ix(j)];
            if (s.gc.adjacent(u, v)) a.edge_color[key(u, v)] = kr_edge(u, v);
        }
    }

    // Step 2: [q2] and [q1] copy the pattern of [q3] by index.
    const auto& q3 = q[2];
    for (int t = 0; t < 2; ++t) {
        const auto& qt = q[ix(t)];
        for (std::size_t j = 0; j < qt.size(); ++j) {
            a.vertex_color[ix(qt[j])] = a.vertex_color[ix(q3[j])];
            for (std::size_t k = j + 1; k < qt.size(); ++k) a.edge_color[key(qt[j], qt[k])] = kr_edge(q3[j], q3[k]);
        }
    }

    // Step 3: [q3]*-[q1] edges take the colors of [q3]*-[q3] edges.
    for (int x : star[2])
        for (std::size_t k = 0; k < q[0].size(); ++k) a.edge_color[key(x, q[0][k])] = kr_edge(x, q3[k]);

    // Step 4: [q2] x ([q1]* u [q3]*) with l2 fresh colors, round robin.
    std::vector<int> right = star[0];
    right.insert(right.end(), star[2].begin(), star[2].end());
    for (int i = 0; i < l2; ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            a.edge_color[key(q[1][ix(i)], right[j])] = pal + (i + static_cast<int>(j)) % l2;

    // Step 5: [q1] x [q2]* with l1 of those fresh colors.
    for (int i = 0; i < l1; ++i)
        for (int j = 0; j < m2; ++j) a.edge_color[key(q[0][ix(i)], star[1][ix(j)])] = pal + (i + j) % l1;

    a.color_count = pal + l2;
    certify(s.gc, a, "three-atom construction on " + p.name());
    return a;
}

DegreeFormula max_degree_complement_formula(const FinitePoset& p)
{
    const auto q = quotient(p);
    if (q.atom_count() < 2) throw ConstructionRefused("degree formula needs at least two atoms");
    if (!is_zero_distributive(p)) throw ConstructionRefused("poset is not 0-distributive");
    const auto gc = complement(zdg(p));
    int lmin = static_cast<int>(p.size());
    for (int k = 0; k < q.atom_count(); ++k)
        lmin = std::min(lmin, static_cast<int>(q.cls(q.atom_class(k)).members.size()));
    return {gc.order() - lmin - 1, gc.max_degree()};
}

ComplementColoring complement_total_coloring(const FinitePoset& p, long long node_limit)
{
    ComplementColoring out;
    out.graph = complement(zdg(p));
    out.delta = out.graph.max_degree();
    const int atoms_n = static_cast<int>(atoms(p).count());
    if (atoms_n == 2) {
        out.path = ConstructionPath::two_atoms;
        out.assignment = complement_total_coloring_two_atoms(p);
        return out;
    }
    if (atoms_n == 3 && is_zero_distributive(p) && three_atom_hypothesis(three_atom_class_sizes(p))) {
        out.path = ConstructionPath::three_atoms;
        out.assignment = complement_total_coloring_three_atoms(p);
        return out;
    }
    out.path = ConstructionPath::density_search;
    auto found = find_total_coloring(out.graph, out.delta + 2, node_limit);
    if (!found) throw ConstructionRefused("search for a total coloring with Delta+2 colors gave up");
    certify(out.graph, *found, "density search");
    out.assignment = std::move(*found);
    return out;
}

}  // namespace zdg
