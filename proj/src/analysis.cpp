#include "zdg/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "color_search.hpp"
#include "zdg/quotient.hpp"
#include "zdg/zdg.hpp"

namespace zdg {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::vector<int> lex_bfs(const SimpleGraph& g)
{
    // Partition refinement; each cell keeps ascending vertex order.
    std::vector<std::vector<int>> cells;
    if (g.order() > 0) {
        cells.emplace_back();
        for (int v = 0; v < g.order(); ++v) cells.front().push_back(v);
    }
    std::vector<int> order;
    while (!cells.empty()) {
        const int v = cells.front().front();
        cells.front().erase(cells.front().begin());
        if (cells.front().empty()) cells.erase(cells.begin());
        order.push_back(v);
        std::vector<std::vector<int>> next;
        for (auto& cell : cells) {
            std::vector<int> in, out;
            for (int w : cell) (g.adjacent(v, w) ? in : out).push_back(w);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        cells = std::move(next);
    }
    return order;
}

namespace {

std::vector<int> find_chordless_cycle(const SimpleGraph& g)
{
    // A chordless cycle through w leaves via two non-adjacent neighbours x, y
    // and returns along a path avoiding the rest of N[w].
    const int n = g.order();
    for (int w = 0; w < n; ++w) {
        const auto nbrs = members(g.neighbors(w));
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int x = nbrs[i];
                const int y = nbrs[j];
                if (g.adjacent(x, y)) continue;
                std::vector<int> prev(ix(n), -2);
                prev[ix(x)] = -1;
                std::deque<int> q{x};
                while (!q.empty() && prev[ix(y)] == -2) {
                    const int u = q.front();
                    q.pop_front();
                    for (int t : members(g.neighbors(u))) {
                        if (prev[ix(t)] != -2 || t == w) continue;
                        if (t != y && g.adjacent(t, w)) continue;
                        prev[ix(t)] = u;
                        q.push_back(t);
                    }
                }
                if (prev[ix(y)] == -2) continue;
                std::vector<int> path;
                for (int t = y; t != -1; t = prev[ix(t)]) path.push_back(t);
                std::reverse(path.begin(), path.end());
                std::vector<int> cycle{w};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    return {};
}

}  // namespace

ChordalityResult chordality(const SimpleGraph& g)
{
    ChordalityResult r;
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(ix(g.order()));
    for (std::size_t i = 0; i < order.size(); ++i) pos[ix(order[i])] = static_cast<int>(i);

    for (int v : order) {
        int parent = -1;
        std::vector<int> later;
        for (int w : members(g.neighbors(v))) {
            if (pos[ix(w)] < pos[ix(v)]) continue;
            later.push_back(w);
            if (parent < 0 || pos[ix(w)] < pos[ix(parent)]) parent = w;
        }
        for (int w : later) {
            if (w != parent && !g.adjacent(w, parent)) {
                r.chordal = false;
                r.chordless_cycle = find_chordless_cycle(g);
                return r;
            }
        }
    }
    r.elimination_order = std::move(order);
    return r;
}

bool is_chordal(const SimpleGraph& g) { return chordality(g).chordal; }

namespace {

class HoleSearch {
public:
    explicit HoleSearch(const SimpleGraph& g) : g_(g), n_(g.order()) {}

    std::optional<std::vector<int>> run()
    {
        for (int len = 5; len <= n_; len += 2) {
            cut_ = false;
            for (int s = 0; s < n_; ++s) {
                path_ = {s};
                if (extend(len)) return path_;
            }
            // Nothing was pruned by the length bound: the search is complete.
            if (!cut_) break;
        }
        return std::nullopt;
    }

private:
    bool extend(int len)
    {
        const int s = path_.front();
        const int last = path_.back();
        const auto depth = static_cast<int>(path_.size());
        for (int x : members(g_.neighbors(last))) {
            if (x <= s) continue;
            if (std::find(path_.begin(), path_.end(), x) != path_.end()) continue;
            bool blocked = false;
            for (int i = 1; i + 1 < depth && !blocked; ++i) blocked = g_.adjacent(x, path_[ix(i)]);
            if (blocked) continue;
            const bool closes = depth >= 2 && g_.adjacent(x, s);
            if (depth == 1) {
                path_.push_back(x);
                if (extend(len)) return true;
                path_.pop_back();
                continue;
            }
            if (closes) {
                // Each cycle is met twice; keep the orientation with path_[1] < x.
                if (depth + 1 == len && path_[1] < x) {
                    path_.push_back(x);
                    return true;
                }
                continue;
            }
            if (depth + 1 >= len) {
                cut_ = true;
                continue;
            }
            path_.push_back(x);
            if (extend(len)) return true;
            path_.pop_back();
        }
        return false;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<int> path_;
    bool cut_ = false;
};

}  // namespace

std::optional<std::vector<int>> find_induced_odd_hole(const SimpleGraph& g) { return HoleSearch(g).run(); }

bool is_perfect(const SimpleGraph& g)
{
    return !find_induced_odd_hole(g) && !find_induced_odd_hole(complement(g));
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const SimpleGraph& g) : g_(g) {}

    std::vector<int> run()
    {
        Bits all(ix(g_.order()));
        all.set();
        std::vector<int> cur;
        expand(cur, all);
        return best_;
    }

private:
    void expand(std::vector<int>& cur, const Bits& cand)
    {
        if (cand.none()) {
            if (cur.size() > best_.size()) best_ = cur;
            return;
        }
        // Greedy colouring of the candidates bounds the clique they can add.
        std::vector<int> order;
        std::vector<int> bound;
        Bits rest = cand;
        int colour = 0;
        while (rest.any()) {
            ++colour;
            Bits q = rest;
            while (q.any()) {
                const auto v = q.find_first();
                q.reset(v);
                q -= g_.neighbors(static_cast<int>(v));
                rest.reset(v);
                order.push_back(static_cast<int>(v));
                bound.push_back(colour);
            }
        }
        Bits left = cand;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (cur.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            const int v = order[i];
            cur.push_back(v);
            expand(cur, left & g_.neighbors(v));
            cur.pop_back();
            left.reset(ix(v));
        }
    }

    const SimpleGraph& g_;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> maximum_clique(const SimpleGraph& g)
{
    auto c = CliqueSearch(g).run();
    std::sort(c.begin(), c.end());
    return c;
}

int clique_number(const SimpleGraph& g) { return static_cast<int>(maximum_clique(g).size()); }

int independence_number(const SimpleGraph& g) { return clique_number(complement(g)); }

namespace {

using Conflicts = std::vector<std::vector<int>>;

struct ElementModel {
    Conflicts conflicts;
    detail::CoverModel cover;
    std::vector<SimpleGraph::Edge> edges;
};

// Elements: vertices first (total only), then edges in ascending order.
ElementModel element_model(const SimpleGraph& g, bool with_vertices)
{
    ElementModel m;
    m.edges = g.edges();
    const int n = g.order();
    const int base = with_vertices ? n : 0;
    const auto count = static_cast<std::size_t>(base) + m.edges.size();
    m.conflicts.assign(count, {});
    m.cover.star.assign(ix(n), {});
    m.cover.ends.assign(count, {-1, -1});
    auto link = [&](int a, int b) {
        m.conflicts[ix(a)].push_back(b);
        m.conflicts[ix(b)].push_back(a);
    };
    if (with_vertices) {
        for (int v = 0; v < n; ++v) {
            m.cover.star[ix(v)].push_back(v);
            m.cover.ends[ix(v)] = {v, -1};
        }
        for (const auto& [u, v] : m.edges) link(u, v);
    }
    std::vector<std::vector<int>> incident(ix(n));
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const int e = base + static_cast<int>(i);
        const auto [u, v] = m.edges[i];
        m.cover.ends[ix(e)] = {u, v};
        for (int w : {u, v}) {
            for (int f : incident[ix(w)]) link(e, f);
            incident[ix(w)].push_back(e);
            m.cover.star[ix(w)].push_back(e);
            if (with_vertices) link(e, w);
        }
    }
    return m;
}

ColoringAssignment to_assignment(const ElementModel& m, const std::vector<int>& colors, int n, bool with_vertices, int k)
{
    ColoringAssignment a;
    a.kind = with_vertices ? ColoringAssignment::Kind::total : ColoringAssignment::Kind::edge;
    a.color_count = k;
    const int base = with_vertices ? n : 0;
    if (with_vertices) a.vertex_color.assign(colors.begin(), colors.begin() + n);
    for (std::size_t i = 0; i < m.edges.size(); ++i) a.edge_color[m.edges[i]] = colors[ix(base) + i];
    return a;
}

std::optional<std::vector<int>> solve(const ElementModel& m, int k, int n, long long node_limit = 0)
{
    detail::ColorSearch search(m.conflicts, k);
    detail::CoverModel cm = m.cover;
    cm.slack.resize(ix(n));
    for (int v = 0; v < n; ++v) cm.slack[ix(v)] = k - static_cast<int>(cm.star[ix(v)].size());
    search.set_cover(std::move(cm));
    return search.run(node_limit);
}

// DSATUR without backtracking; colors open as needed.
std::vector<int> greedy_colors(const Conflicts& conf)
{
    const auto n = conf.size();
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> seen(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_sat = 0;
        for (std::size_t e = 0; e < n; ++e) {
            if (color[e] >= 0) continue;
            const auto sat = static_cast<std::size_t>(std::count(seen[e].begin(), seen[e].end(), true));
            if (best == n || sat > best_sat || (sat == best_sat && conf[e].size() > conf[best].size())) {
                best = e;
                best_sat = sat;
            }
        }
        int c = 0;
        while (ix(c) < seen[best].size() && seen[best][ix(c)]) ++c;
        color[best] = c;
        for (int f : conf[best]) {
            auto& s = seen[ix(f)];
            if (s.size() <= ix(c)) s.resize(ix(c) + 1, false);
            s[ix(c)] = true;
        }
    }
    return color;
}

int count_colors(const std::vector<int>& colors)
{
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace

ExactColoring chromatic(const SimpleGraph& g)
{
    const int n = g.order();
    Conflicts conf(ix(n));
    for (int v = 0; v < n; ++v) conf[ix(v)] = members(g.neighbors(v));

    auto best = greedy_colors(conf);
    int upper = count_colors(best);
    const int lower = clique_number(g);
    for (int k = lower; k < upper; ++k) {
        detail::ColorSearch search(conf, k);
        if (auto r = search.run()) {
            best = *r;
            upper = k;
            break;
        }
    }
    ExactColoring out;
    out.value = upper;
    out.assignment.kind = ColoringAssignment::Kind::vertex;
    out.assignment.vertex_color = best;
    out.assignment.color_count = upper;
    return out;
}

int chromatic_number(const SimpleGraph& g) { return chromatic(g).value; }

ExactColoring edge_chromatic(const SimpleGraph& g)
{
    const auto m = element_model(g, false);
    const int delta = g.max_degree();
    for (int k = delta;; ++k) {
        if (auto r = solve(m, k, g.order()))
            return {k, to_assignment(m, *r, g.order(), false, k)};
    }
}

int edge_chromatic_number(const SimpleGraph& g) { return edge_chromatic(g).value; }

EdgeClass edge_class(const SimpleGraph& g)
{
    return edge_chromatic_number(g) == g.max_degree() ? EdgeClass::one : EdgeClass::two;
}

SizeCapRefusal::SizeCapRefusal(TotalColoringResult fallback)
    : std::runtime_error("exact search refused: instance above the size cap"), fallback_(std::move(fallback))
{
}

ColoringAssignment greedy_total_coloring(const SimpleGraph& g)
{
    const auto m = element_model(g, true);
    const auto colors = greedy_colors(m.conflicts);
    return to_assignment(m, colors, g.order(), true, count_colors(colors));
}

std::optional<ColoringAssignment> find_total_coloring(const SimpleGraph& g, int k, long long node_limit)
{
    const auto m = element_model(g, true);
    if (auto r = solve(m, k, g.order(), node_limit)) return to_assignment(m, *r, g.order(), true, k);
    return std::nullopt;
}

TotalColoringResult total_coloring(const SimpleGraph& g, const SearchLimits& limits)
{
    TotalColoringResult out;
    const int delta = g.max_degree();
    out.lower = g.order() == 0 ? 0 : delta + 1;
    if (g.order() > limits.max_vertices || static_cast<int>(g.edge_count()) > limits.max_edges) {
        out.assignment = greedy_total_coloring(g);
        out.upper = out.assignment.color_count;
        out.exact = false;
        return out;
    }
    const auto m = element_model(g, true);
    for (int k = out.lower;; ++k) {
        if (auto r = solve(m, k, g.order())) {
            out.assignment = to_assignment(m, *r, g.order(), true, k);
            out.lower = out.upper = k;
            out.exact = true;
            return out;
        }
    }
}

int total_chromatic_number(const SimpleGraph& g, const SearchLimits& limits)
{
    auto r = total_coloring(g, limits);
    if (!r.exact) throw SizeCapRefusal(std::move(r));
    return r.upper;
}

bool verify_tcc(const SimpleGraph& g, const SearchLimits& limits)
{
    if (g.order() == 0) return true;
    const int chi2 = total_chromatic_number(g, limits);
    const int delta = g.max_degree();
    return chi2 == delta + 1 || chi2 == delta + 2;
}

TotalType classify_type(const std::vector<int>& chain_sizes)
{
    if (chain_sizes.size() < 2) throw InputError("type classification needs at least two chain factors");
    return chain_sizes.size() == 2 && chain_sizes[0] == chain_sizes[1] ? TotalType::two : TotalType::one;
}

TotalType classify_type(const FinitePoset& p)
{
    const auto q = quotient(p);
    if (!quotient_is_boolean(q)) throw InputError("type classification needs a Boolean quotient");
    std::vector<int> sizes;
    for (int k = 0; k < q.atom_count(); ++k)
        sizes.push_back(static_cast<int>(q.cls(q.atom_class(k)).members.size()) + 1);
    return classify_type(sizes);
}

bool independent_set_bound_check(const SimpleGraph& g)
{
    if (g.order() == 0) return true;
    return independence_number(g) >= g.order() - g.max_degree() - 1;
}

bool independent_set_bound_check(const FinitePoset& p)
{
    const auto vs = zdg_vertices(p);
    const auto g = zdg(p);
    if (g.order() == 0) return true;
    const int need = g.order() - g.max_degree() - 1;
    for (int q : members(atoms(p))) {
        std::vector<int> cone;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (p.le(q, vs[i])) cone.push_back(static_cast<int>(i));
        bool independent = true;
        for (std::size_t i = 0; i < cone.size() && independent; ++i)
            for (std::size_t j = i + 1; j < cone.size() && independent; ++j)
                independent = !g.adjacent(cone[i], cone[j]);
        if (independent && static_cast<int>(cone.size()) >= need) return true;
    }
    return false;
}

bool density_bound_check(const SimpleGraph& g)
{
    return 4 * g.max_degree() >= 3 * g.order();
}

}  // namespace zdg
