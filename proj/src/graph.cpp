#include "zdg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zdg {

namespace {

std::vector<std::string> default_labels(int n)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : SimpleGraph(default_labels(n)) {}

SimpleGraph::SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels))
{
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InputError("duplicate vertex label");
    adj_.assign(labels_.size(), Bits(labels_.size()));
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : SimpleGraph(std::move(labels))
{
    for (auto [u, v] : edges) add_edge(u, v);
}

int SimpleGraph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

void SimpleGraph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw InputError("edge [" + std::to_string(u) + "," + std::to_string(v) + "] references a missing vertex");
    if (u == v) throw InputError("loop on vertex \"" + label(u) + "\"");
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    ++edge_count_;
}

std::vector<SimpleGraph::Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u) {
        const auto& row = neighbors(u);
        for (auto v = row.find_next(static_cast<std::size_t>(u)); v != Bits::npos; v = row.find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    }
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const
{
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(label(v));
    SimpleGraph h(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

SimpleGraph complete_graph(int n)
{
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph cycle_graph(int n)
{
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph path_graph(int n)
{
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph complete_bipartite(int m, int n)
{
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 0; j < n; ++j) labels.push_back("b" + std::to_string(j));
    SimpleGraph g(std::move(labels));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

SimpleGraph complement(const SimpleGraph& g)
{
    SimpleGraph h(g.labels());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

namespace {

std::vector<std::string> merged_labels(const SimpleGraph& g, const SimpleGraph& h)
{
    std::vector<std::string> labels = g.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const auto& l : h.labels()) {
        std::string name = l;
        while (used.count(name)) name += "'";
        used.insert(name);
        labels.push_back(name);
    }
    return labels;
}

}  // namespace

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph out(merged_labels(g, h));
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

namespace {

template <class Same>
std::vector<int> classes_by(const SimpleGraph& g, Same same)
{
    const int n = g.order();
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int u = 0; u < n; ++u) {
        if (cls[static_cast<std::size_t>(u)] >= 0) continue;
        cls[static_cast<std::size_t>(u)] = next;
        for (int v = u + 1; v < n; ++v)
            if (cls[static_cast<std::size_t>(v)] < 0 && same(u, v)) cls[static_cast<std::size_t>(v)] = next;
        ++next;
    }
    return cls;
}

SimpleGraph contract(const SimpleGraph& g, const std::vector<int>& cls)
{
    const int k = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> rep(static_cast<std::size_t>(k), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v) {
        auto& r = rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
        if (r < 0) {
            r = v;
            labels.push_back(g.label(v));
        }
    }
    SimpleGraph out(std::move(labels));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(rep[static_cast<std::size_t>(a)], rep[static_cast<std::size_t>(b)])) out.add_edge(a, b);
    return out;
}

}  // namespace

std::vector<int> simeq_classes(const SimpleGraph& g)
{
    return classes_by(g, [&](int u, int v) {
        if (!g.adjacent(u, v)) return false;
        Bits nu = g.neighbors(u);
        Bits nv = g.neighbors(v);
        nu.reset(static_cast<std::size_t>(v));
        nv.reset(static_cast<std::size_t>(u));
        return nu == nv;
    });
}

std::vector<int> theta_classes(const SimpleGraph& g)
{
    return classes_by(g, [&](int u, int v) { return g.neighbors(u) == g.neighbors(v); });
}

SimpleGraph reduce_simeq(const SimpleGraph& g) { return contract(g, simeq_classes(g)); }
SimpleGraph reduce_theta(const SimpleGraph& g) { return contract(g, theta_classes(g)); }

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.order())
    {
        twin_ = std::vector<int>(static_cast<std::size_t>(n_));
        const auto a = simeq_classes(g);
        const auto b = theta_classes(g);
        // Any two vertices in one twin class are swapped by an automorphism.
        for (int v = 0; v < n_; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            twin_[sv] = v;
            for (int u = 0; u < v; ++u)
                if (a[static_cast<std::size_t>(u)] == a[sv] || b[static_cast<std::size_t>(u)] == b[sv]) {
                    twin_[sv] = twin_[static_cast<std::size_t>(u)];
                    break;
                }
        }
    }

    std::vector<std::uint16_t> run()
    {
        placed_.assign(static_cast<std::size_t>(n_), false);
        current_.clear();
        order_.clear();
        best_.clear();
        recurse(0);
        std::vector<std::uint16_t> out{static_cast<std::uint16_t>(n_)};
        out.insert(out.end(), best_.begin(), best_.end());
        return out;
    }

private:
    std::uint16_t row_of(int v) const
    {
        std::uint16_t r = 0;
        for (std::size_t j = 0; j < order_.size(); ++j)
            if (g_.adjacent(v, order_[j])) r = static_cast<std::uint16_t>(r | (1u << (15 - j)));
        return r;
    }

    void recurse(std::size_t depth)
    {
        if (depth == static_cast<std::size_t>(n_)) {
            if (best_.empty() || current_ < best_) best_ = current_;
            return;
        }
        std::uint16_t lo = 0xffff;
        std::vector<int> cands;
        for (int v = 0; v < n_; ++v) {
            if (placed_[static_cast<std::size_t>(v)]) continue;
            const auto r = row_of(v);
            if (r < lo) {
                lo = r;
                cands.clear();
            }
            if (r == lo) cands.push_back(v);
        }
        if (!best_.empty()) {
            // Prune when the prefix is already larger than the incumbent.
            const auto diff = std::mismatch(current_.begin(), current_.end(), best_.begin());
            if (diff.first != current_.end()) {
                if (*diff.first > *diff.second) return;
            } else if (lo > best_[depth]) {
                return;
            }
        }
        std::vector<bool> tried(static_cast<std::size_t>(n_), false);
        for (int v : cands) {
            // Only one representative per twin class among unplaced vertices.
            const auto t = static_cast<std::size_t>(twin_[static_cast<std::size_t>(v)]);
            if (tried[t]) continue;
            tried[t] = true;
            placed_[static_cast<std::size_t>(v)] = true;
            order_.push_back(v);
            current_.push_back(lo);
            recurse(depth + 1);
            current_.pop_back();
            order_.pop_back();
            placed_[static_cast<std::size_t>(v)] = false;
        }
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<int> twin_;
    std::vector<bool> placed_;
    std::vector<int> order_;
    std::vector<std::uint16_t> current_;
    std::vector<std::uint16_t> best_;
};

}  // namespace

std::vector<std::uint16_t> canonical_form(const SimpleGraph& g)
{
    if (g.order() > max_canonical_order)
        throw std::invalid_argument("canonical form limited to " + std::to_string(max_canonical_order) + " vertices");
    return CanonicalSearch(g).run();
}

bool isomorphic(const SimpleGraph& g, const SimpleGraph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace zdg
