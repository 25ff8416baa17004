#include "color_search.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace zdg::detail {

namespace {

constexpr std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

class Blossom {
public:
    explicit Blossom(const std::vector<std::uint64_t>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), match_(adj.size(), -1), p_(adj.size()),
          base_(adj.size()), used_(adj.size()), in_blossom_(adj.size())
    {
    }

    bool perfect()
    {
        if (n_ % 2) return false;
        // Greedy start.
        for (int v = 0; v < n_; ++v) {
            if (match_[ix(v)] >= 0) continue;
            for (std::uint64_t m = adj_[ix(v)]; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (match_[ix(w)] < 0) {
                    match_[ix(v)] = w;
                    match_[ix(w)] = v;
                    break;
                }
            }
        }
        for (int r = 0; r < n_; ++r) {
            if (match_[ix(r)] >= 0) continue;
            int v = find_path(r);
            // A vertex with no augmenting path stays exposed in every
            // maximum matching.
            if (v < 0) return false;
            while (v >= 0) {
                const int pv = p_[ix(v)];
                const int ppv = match_[ix(pv)];
                match_[ix(v)] = pv;
                match_[ix(pv)] = v;
                v = ppv;
            }
        }
        return true;
    }

private:
    static std::size_t ix(int v) { return static_cast<std::size_t>(v); }

    int lca(int a, int b)
    {
        std::vector<bool> seen(ix(n_), false);
        for (;;) {
            a = base_[ix(a)];
            seen[ix(a)] = true;
            if (match_[ix(a)] < 0) break;
            a = p_[ix(match_[ix(a)])];
        }
        for (;;) {
            b = base_[ix(b)];
            if (seen[ix(b)]) return b;
            b = p_[ix(match_[ix(b)])];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[ix(v)] != b) {
            in_blossom_[ix(base_[ix(v)])] = true;
            in_blossom_[ix(base_[ix(match_[ix(v)])])] = true;
            p_[ix(v)] = child;
            child = match_[ix(v)];
            v = p_[ix(match_[ix(v)])];
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[ix(i)] = i;
        used_[ix(root)] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (std::uint64_t m = adj_[ix(v)]; m; m &= m - 1) {
                const int to = std::countr_zero(m);
                if (base_[ix(v)] == base_[ix(to)] || match_[ix(v)] == to) continue;
                if (to == root || (match_[ix(to)] >= 0 && p_[ix(match_[ix(to)])] >= 0)) {
                    const int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[ix(base_[ix(i)])]) continue;
                        base_[ix(i)] = cur;
                        if (!used_[ix(i)]) {
                            used_[ix(i)] = true;
                            q.push_back(i);
                        }
                    }
                } else if (p_[ix(to)] < 0) {
                    p_[ix(to)] = v;
                    if (match_[ix(to)] < 0) return to;
                    used_[ix(match_[ix(to)])] = true;
                    q.push_back(match_[ix(to)]);
                }
            }
        }
        return -1;
    }

    const std::vector<std::uint64_t>& adj_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace

bool has_perfect_matching(const std::vector<std::uint64_t>& adj)
{
    if (adj.size() > 64) throw std::invalid_argument("matching graph too large");
    return Blossom(adj).perfect();
}

ColorSearch::ColorSearch(std::vector<std::vector<int>> conflicts, int k) : conf_(std::move(conflicts)), k_(k)
{
    if (k < 0 || k > 64) throw std::invalid_argument("color search supports at most 64 colors");
    const auto n = conf_.size();
    static_degree_.resize(n);
    for (std::size_t e = 0; e < n; ++e) static_degree_[e] = static_cast<int>(conf_[e].size());
}

void ColorSearch::set_cover(CoverModel m)
{
    // The matching check pairs up to 2|V| + 1 nodes.
    if (2 * m.star.size() + 1 > 64) return;
    cover_ = std::move(m);
}

std::optional<std::vector<int>> ColorSearch::run(long long node_limit)
{
    long long total = 0;
    long long cap = 4096;
    hit_limit_ = false;
    for (unsigned seed = 0;; ++seed) {
        long long this_cap = cap;
        if (node_limit > 0) this_cap = std::min(cap, node_limit - total);
        auto r = attempt(seed, this_cap);
        total += nodes_;
        if (r || !hit_limit_) {
            nodes_ = total;
            return r;
        }
        if (node_limit > 0 && total >= node_limit) {
            nodes_ = total;
            return std::nullopt;
        }
        cap *= 2;
    }
}

std::optional<std::vector<int>> ColorSearch::attempt(unsigned seed, long long cap)
{
    const auto n = conf_.size();
    color_.assign(n, -1);
    const std::uint64_t full = k_ == 64 ? ~std::uint64_t{0} : bit(k_) - 1;
    dom_.assign(n, full);
    trail_.clear();
    marks_.clear();
    assigned_.clear();
    max_used_.assign(1, -1);
    nodes_ = 0;
    limit_ = cap;
    hit_limit_ = false;
    priority_.resize(n);
    for (std::size_t e = 0; e < n; ++e) priority_[e] = static_cast<int>(e);
    rng_.seed(seed);
    shuffle_values_ = seed != 0;
    if (shuffle_values_) std::shuffle(priority_.begin(), priority_.end(), rng_);
    if (cover_) present_.assign(cover_->star.size(), 0);

    if (n > 0 && k_ == 0) return std::nullopt;
    if (cover_) {
        for (int c = 0; c < k_; ++c)
            if (!cover_color_ok(c)) return std::nullopt;
    }
    if (recurse()) return color_;
    return std::nullopt;
}

bool ColorSearch::needy(int v, int c) const
{
    return cover_->slack[static_cast<std::size_t>(v)] == 0 && !(present_[static_cast<std::size_t>(v)] & bit(c));
}

bool ColorSearch::assign(int e, int c)
{
    const auto se = static_cast<std::size_t>(e);
    const std::uint64_t options = dom_[se];
    marks_.push_back(trail_.size());
    assigned_.push_back(e);
    color_[se] = c;
    max_used_.push_back(std::max(max_used_.back(), c));
    if (cover_)
        for (int v : cover_->ends[se])
            if (v >= 0) present_[static_cast<std::size_t>(v)] |= bit(c);

    bool ok = true;
    for (int f : conf_[se]) {
        const auto sf = static_cast<std::size_t>(f);
        if (color_[sf] >= 0 || !(dom_[sf] & bit(c))) continue;
        trail_.emplace_back(f, dom_[sf]);
        dom_[sf] &= ~bit(c);
        if (!dom_[sf]) ok = false;
    }
    if (ok && cover_) ok = cover_ok(e, c, options);
    return ok;
}

void ColorSearch::undo()
{
    const int e = assigned_.back();
    const auto se = static_cast<std::size_t>(e);
    assigned_.pop_back();
    max_used_.pop_back();
    if (cover_)
        for (int v : cover_->ends[se])
            if (v >= 0) present_[static_cast<std::size_t>(v)] &= ~bit(color_[se]);
    color_[se] = -1;
    const auto mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
        dom_[static_cast<std::size_t>(trail_.back().first)] = trail_.back().second;
        trail_.pop_back();
    }
}

bool ColorSearch::cover_ok(int e, int c, std::uint64_t options)
{
    if (!cover_color_ok(c)) return false;
    // Other colors only lost e as an option.
    for (std::uint64_t m = options & ~bit(c); m; m &= m - 1) {
        const int d = std::countr_zero(m);
        bool touched = false;
        for (int v : cover_->ends[static_cast<std::size_t>(e)])
            if (v >= 0 && needy(v, d)) touched = true;
        if (touched && !cover_color_ok(d)) return false;
    }
    return true;
}

bool ColorSearch::cover_color_ok(int c)
{
    const auto& cm = *cover_;
    const int nv = static_cast<int>(cm.star.size());
    // node ids: vertices in `strict` first, then free partners, then a pad.
    std::vector<int> node(static_cast<std::size_t>(nv), -1);
    std::vector<int> strict;
    std::vector<std::vector<int>> partners;
    for (int v = 0; v < nv; ++v) {
        if (!needy(v, c)) continue;
        bool self = false;
        std::vector<int> ps;
        for (int x : cm.star[static_cast<std::size_t>(v)]) {
            const auto sx = static_cast<std::size_t>(x);
            if (color_[sx] >= 0 || !(dom_[sx] & bit(c))) continue;
            const auto& en = cm.ends[sx];
            if (en[1] < 0) self = true;
            else ps.push_back(en[0] == v ? en[1] : en[0]);
        }
        if (!self && ps.empty()) return false;
        if (self) continue;  // can cover itself; otherwise a free partner
        node[static_cast<std::size_t>(v)] = static_cast<int>(strict.size());
        strict.push_back(v);
        partners.push_back(std::move(ps));
    }
    if (strict.empty()) return true;

    const int r = static_cast<int>(strict.size());
    int h = 0;
    std::vector<int> helper(static_cast<std::size_t>(nv), -1);
    for (const auto& ps : partners)
        for (int w : ps)
            if (node[static_cast<std::size_t>(w)] < 0 && helper[static_cast<std::size_t>(w)] < 0)
                helper[static_cast<std::size_t>(w)] = r + h++;
    int total = r + h;
    const bool pad = total % 2 != 0;
    if (pad) ++total;
    if (total > 64) return true;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(total), 0);
    auto link = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)] |= bit(b);
        adj[static_cast<std::size_t>(b)] |= bit(a);
    };
    for (int i = 0; i < r; ++i)
        for (int w : partners[static_cast<std::size_t>(i)]) {
            const int j = node[static_cast<std::size_t>(w)] >= 0 ? node[static_cast<std::size_t>(w)]
                                                                  : helper[static_cast<std::size_t>(w)];
            link(i, j);
        }
    // Unused free nodes pair up among themselves.
    for (int a = r; a < total; ++a)
        for (int b = a + 1; b < total; ++b) link(a, b);
    return has_perfect_matching(adj);
}

int ColorSearch::choose() const
{
    int best = -1;
    int best_size = 65;
    for (std::size_t e = 0; e < color_.size(); ++e) {
        if (color_[e] >= 0) continue;
        const int s = std::popcount(dom_[e]);
        bool better = s < best_size;
        if (s == best_size) {
            const auto sb = static_cast<std::size_t>(best);
            better = static_degree_[e] > static_degree_[sb] ||
                     (static_degree_[e] == static_degree_[sb] && priority_[e] < priority_[sb]);
        }
        if (better) {
            best = static_cast<int>(e);
            best_size = s;
        }
    }
    return best;
}

bool ColorSearch::recurse()
{
    ++nodes_;
    if (limit_ > 0 && nodes_ > limit_) {
        hit_limit_ = true;
        return false;
    }
    const int e = choose();
    if (e < 0) return true;
    const int open = std::min(k_, max_used_.back() + 2);
    const std::uint64_t allowed = dom_[static_cast<std::size_t>(e)] & (open == 64 ? ~std::uint64_t{0} : bit(open) - 1);
    std::vector<int> order;
    for (std::uint64_t m = allowed; m; m &= m - 1) order.push_back(std::countr_zero(m));
    if (shuffle_values_) std::shuffle(order.begin(), order.end(), rng_);
    for (int c : order) {
        const bool ok = assign(e, c);
        if (ok && recurse()) return true;
        undo();
        if (hit_limit_) return false;
    }
    return false;
}

}  // namespace zdg::detail
