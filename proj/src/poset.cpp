#include "zdg/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace zdg {

namespace {

void check_size(std::size_t n)
{
    if (n == 0) throw InputError("poset has no elements");
    if (n > max_poset_size)
        throw InputError("poset has " + std::to_string(n) + " elements, limit is " +
                         std::to_string(max_poset_size));
}

void check_unique(const std::vector<std::string>& labels)
{
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!seen.emplace(labels[i], static_cast<int>(i)).second)
            throw InputError("duplicate element label \"" + labels[i] + "\"");
}

}  // namespace

ElementSet make_set(std::size_t universe, std::initializer_list<int> ms)
{
    return make_set(universe, std::vector<int>(ms));
}

ElementSet make_set(std::size_t universe, const std::vector<int>& ms)
{
    ElementSet s(universe);
    for (int m : ms) {
        if (m < 0 || static_cast<std::size_t>(m) >= universe)
            throw std::out_of_range("element index " + std::to_string(m) + " out of range");
        s.set(static_cast<std::size_t>(m));
    }
    return s;
}

std::vector<int> members(const ElementSet& s)
{
    std::vector<int> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

FinitePoset FinitePoset::from_covers(std::string name, std::vector<std::string> labels,
                                     const std::vector<Cover>& covers)
{
    const auto n = labels.size();
    check_size(n);
    check_unique(labels);

    std::vector<std::vector<int>> succ(n);
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n || static_cast<std::size_t>(hi) >= n)
            throw InputError("cover [" + std::to_string(lo) + "," + std::to_string(hi) +
                             "] references a missing element");
        if (lo == hi) throw InputError("self cover on element \"" + labels[static_cast<std::size_t>(lo)] + "\"");
        succ[static_cast<std::size_t>(lo)].push_back(hi);
    }

    // Topological order; anything left over lies on a cycle.
    std::vector<int> indeg(n, 0);
    for (const auto& s : succ)
        for (int h : s) ++indeg[static_cast<std::size_t>(h)];
    std::vector<int> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) order.push_back(static_cast<int>(i));
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int h : succ[static_cast<std::size_t>(order[k])])
            if (--indeg[static_cast<std::size_t>(h)] == 0) order.push_back(h);
    if (order.size() != n) {
        for (std::size_t i = 0; i < n; ++i)
            if (indeg[i] > 0) throw InputError("cover relation has a cycle through \"" + labels[i] + "\"");
    }

    std::vector<Bits> up(n, Bits(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& row = up[static_cast<std::size_t>(*it)];
        row.set(static_cast<std::size_t>(*it));
        for (int h : succ[static_cast<std::size_t>(*it)]) row |= up[static_cast<std::size_t>(h)];
    }

    FinitePoset p;
    p.name_ = std::move(name);
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.finish();
    return p;
}

FinitePoset FinitePoset::from_relation(std::string name, std::vector<std::string> labels,
                                       std::vector<Bits> up)
{
    check_size(labels.size());
    check_unique(labels);
    if (up.size() != labels.size()) throw InputError("relation size does not match label count");
    for (const auto& row : up)
        if (row.size() != labels.size()) throw InputError("relation row has wrong width");
    FinitePoset p;
    p.name_ = std::move(name);
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.finish();
    if (!p.is_partial_order()) throw InputError("relation is not a partial order");
    return p;
}

void FinitePoset::finish()
{
    const auto n = labels_.size();
    down_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) down_[j].set(i);

    std::optional<int> zero;
    for (std::size_t i = 0; i < n; ++i) {
        if (up_[i].count() == n) {
            zero = static_cast<int>(i);
            break;
        }
    }
    if (!zero) throw InputError("poset \"" + name_ + "\" has no least element");
    zero_ = *zero;
    down_nz_ = down_;
    for (auto& row : down_nz_) row.reset(static_cast<std::size_t>(zero_));
    one_.reset();
    for (std::size_t i = 0; i < n; ++i) {
        if (down_[i].count() == n) {
            one_ = static_cast<int>(i);
            break;
        }
    }
}

std::optional<int> FinitePoset::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

bool FinitePoset::disjoint(int a, int b) const
{
    return !down_nz_[static_cast<std::size_t>(a)].intersects(down_nz_[static_cast<std::size_t>(b)]);
}

std::vector<FinitePoset::Cover> FinitePoset::covers() const
{
    std::vector<Cover> out;
    const auto n = size();
    for (std::size_t a = 0; a < n; ++a) {
        Bits strict = up_[a];
        strict.reset(a);
        for (auto b = strict.find_first(); b != Bits::npos; b = strict.find_next(b)) {
            // a < b is a cover iff no c with a < c < b.
            Bits between = strict & down_[b];
            between.reset(b);
            if (between.none()) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return out;
}

bool FinitePoset::is_partial_order() const
{
    const auto n = size();
    for (std::size_t a = 0; a < n; ++a) {
        if (!up_[a].test(a)) return false;
        for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) {
            if (b != a && up_[b].test(a)) return false;
            if (!up_[b].is_subset_of(up_[a])) return false;
        }
    }
    return true;
}

FinitePoset FinitePoset::renamed(std::string name) const
{
    FinitePoset p = *this;
    p.name_ = std::move(name);
    return p;
}

ElementSet upper_cone(const FinitePoset& p, const ElementSet& a)
{
    if (a.size() != p.size()) throw std::out_of_range("element set belongs to another poset");
    if (a.none()) throw std::invalid_argument("empty cone argument");
    ElementSet out(p.size());
    out.set();
    for (int x : members(a)) out &= p.up(x);
    return out;
}

ElementSet lower_cone(const FinitePoset& p, const ElementSet& a)
{
    if (a.size() != p.size()) throw std::out_of_range("element set belongs to another poset");
    if (a.none()) throw std::invalid_argument("empty cone argument");
    ElementSet out(p.size());
    out.set();
    for (int x : members(a)) out &= p.down(x);
    return out;
}

ElementSet annihilator(const FinitePoset& p, const ElementSet& a)
{
    if (a.size() != p.size()) throw std::out_of_range("element set belongs to another poset");
    if (a.none()) throw std::invalid_argument("empty annihilator argument");
    const auto xs = members(a);
    ElementSet out(p.size());
    for (std::size_t b = 0; b < p.size(); ++b) {
        bool all = true;
        for (int x : xs) {
            if (!p.disjoint(x, static_cast<int>(b))) {
                all = false;
                break;
            }
        }
        if (all) out.set(b);
    }
    return out;
}

ElementSet atoms(const FinitePoset& p)
{
    ElementSet out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.down(static_cast<int>(i)).count() == 2) out.set(i);
    return out;
}

ElementSet zero_divisors(const FinitePoset& p)
{
    ElementSet out(p.size());
    const auto n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (static_cast<int>(b) == p.zero()) continue;
            if (p.disjoint(static_cast<int>(a), static_cast<int>(b))) {
                out.set(a);
                break;
            }
        }
    }
    return out;
}

ElementSet dense_elements(const FinitePoset& p)
{
    ElementSet z = zero_divisors(p);
    z.flip();
    return z;
}

bool is_zero_distributive(const FinitePoset& p)
{
    const auto n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a) {
        std::vector<int> ann;
        for (int b = 0; b < n; ++b)
            if (p.disjoint(a, b)) ann.push_back(b);
        for (std::size_t i = 0; i < ann.size(); ++i) {
            for (std::size_t j = i + 1; j < ann.size(); ++j) {
                const Bits ub = p.up(ann[i]) & p.up(ann[j]);
                // {a} u {b,c}^u; with no upper bound the cone is just {a}.
                Bits low = p.down(a);
                for (auto u = ub.find_first(); u != Bits::npos; u = ub.find_next(u))
                    low &= p.down(static_cast<int>(u));
                low.reset(static_cast<std::size_t>(p.zero()));
                if (low.any()) return false;
            }
        }
    }
    return true;
}

std::optional<int> pseudocomplement(const FinitePoset& p, int a)
{
    const ElementSet ann = annihilator(p, make_set(p.size(), {a}));
    for (int b : members(ann))
        if (p.down(b) == ann) return b;
    return std::nullopt;
}

bool is_ssc(const FinitePoset& p)
{
    const auto n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (p.le(a, b)) continue;
            bool found = false;
            const Bits& below = p.down(a);
            for (auto c = below.find_first(); c != Bits::npos; c = below.find_next(c)) {
                if (static_cast<int>(c) == p.zero()) continue;
                if (p.disjoint(b, static_cast<int>(c))) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

namespace {

std::optional<int> least_of(const FinitePoset& p, const Bits& s)
{
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
        if (s.is_subset_of(p.up(static_cast<int>(i)))) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> greatest_of(const FinitePoset& p, const Bits& s)
{
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
        if (s.is_subset_of(p.down(static_cast<int>(i)))) return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace

bool is_lattice(const FinitePoset& p)
{
    const auto n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!least_of(p, p.up(a) & p.up(b))) return false;
            if (!greatest_of(p, p.down(a) & p.down(b))) return false;
        }
    }
    return true;
}

BooleanCheck is_boolean(const FinitePoset& p)
{
    if (!is_lattice(p)) return BooleanCheck::not_a_lattice;
    const auto n = static_cast<int>(p.size());
    const int top = *p.one();  // finite lattices are bounded
    const ElementSet at = atoms(p);
    const auto k = at.count();
    if (k >= 13 || p.size() != (std::size_t{1} << k)) return BooleanCheck::not_boolean;

    for (int a = 0; a < n; ++a) {
        // atomistic: a is the join of the atoms below it
        const Bits below = p.down(a) & at;
        Bits ub(p.size());
        ub.set();
        for (auto q = below.find_first(); q != Bits::npos; q = below.find_next(q)) ub &= p.up(static_cast<int>(q));
        if (least_of(p, ub) != a) return BooleanCheck::not_boolean;

        bool complemented = false;
        for (int b = 0; b < n && !complemented; ++b) {
            complemented = least_of(p, p.up(a) & p.up(b)) == top &&
                           greatest_of(p, p.down(a) & p.down(b)) == p.zero();
        }
        if (!complemented) return BooleanCheck::not_boolean;
    }
    return BooleanCheck::boolean;
}

FinitePoset dual(const FinitePoset& p)
{
    if (!p.one()) throw InputError("dual requires a greatest element");
    std::vector<Bits> up;
    up.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) up.push_back(p.down(static_cast<int>(i)));
    return FinitePoset::from_relation(p.name() + "-dual", p.labels(), std::move(up));
}

FinitePoset direct_product(const std::vector<FinitePoset>& ps)
{
    if (ps.empty()) throw InputError("direct product of no posets");
    std::size_t total = 1;
    for (const auto& f : ps) {
        total *= f.size();
        if (total > max_poset_size) check_size(total);
    }

    // Mixed-radix index, first factor most significant.
    std::vector<std::vector<int>> tuples(total, std::vector<int>(ps.size()));
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t rest = t;
        for (std::size_t k = ps.size(); k-- > 0;) {
            tuples[t][k] = static_cast<int>(rest % ps[k].size());
            rest /= ps[k].size();
        }
    }

    std::vector<std::string> labels(total);
    std::string name;
    for (std::size_t k = 0; k < ps.size(); ++k) name += (k ? "x" : "") + ps[k].name();
    for (std::size_t t = 0; t < total; ++t) {
        std::string s = "(";
        for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? "," : "") + ps[k].label(tuples[t][k]);
        labels[t] = s + ")";
    }

    std::vector<Bits> up(total, Bits(total));
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            bool le = true;
            for (std::size_t k = 0; k < ps.size() && le; ++k) le = ps[k].le(tuples[a][k], tuples[b][k]);
            if (le) up[a].set(b);
        }

    FinitePoset p;
    p.name_ = name;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    check_unique(p.labels_);
    p.finish();
    return p;
}

FinitePoset make_chain(int n)
{
    if (n < 1) throw InputError("chain needs at least one element");
    std::vector<std::string> labels;
    std::vector<FinitePoset::Cover> covers;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 0) covers.emplace_back(i - 1, i);
    }
    return FinitePoset::from_covers("C" + std::to_string(n), std::move(labels), covers);
}

FinitePoset make_boolean(int n)
{
    if (n < 0 || n > 12) throw InputError("boolean lattice rank must be in [0,12]");
    const int total = 1 << n;
    std::vector<std::string> labels(static_cast<std::size_t>(total));
    for (int s = 0; s < total; ++s) {
        if (s == 0) {
            labels[0] = "0";
            continue;
        }
        std::string l = "{";
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if (s & (1 << i)) {
                l += (first ? "" : ",") + std::to_string(i + 1);
                first = false;
            }
        }
        labels[static_cast<std::size_t>(s)] = l + "}";
    }
    std::vector<FinitePoset::Cover> covers;
    for (int s = 0; s < total; ++s)
        for (int i = 0; i < n; ++i)
            if (!(s & (1 << i))) covers.emplace_back(s, s | (1 << i));
    return FinitePoset::from_covers("2^" + std::to_string(n), std::move(labels), covers);
}

FinitePoset make_chain_product(const std::vector<int>& sizes)
{
    if (sizes.empty()) throw InputError("chain product needs at least one factor");
    std::vector<FinitePoset> factors;
    std::string name;
    for (int s : sizes) {
        factors.push_back(make_chain(s));
        name += (name.empty() ? "C" : "xC") + std::to_string(s);
    }
    if (factors.size() == 1) return factors.front();
    return direct_product(factors).renamed(name);
}

FinitePoset make_divisor_lattice(long n)
{
    if (n < 1) throw InputError("divisor lattice needs n >= 1");
    std::vector<long> divs;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::vector<std::string> labels;
    for (long d : divs) labels.push_back(std::to_string(d));
    std::vector<FinitePoset::Cover> covers;
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = 0; j < divs.size(); ++j) {
            if (divs[j] % divs[i] != 0 || i == j) continue;
            const long r = divs[j] / divs[i];
            bool prime = r > 1;
            for (long f = 2; f * f <= r && prime; ++f) prime = r % f != 0;
            if (prime) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return FinitePoset::from_covers("D" + std::to_string(n), std::move(labels), covers);
}

FinitePoset make_atom_coatom_poset(int n)
{
    if (n < 1) throw InputError("atom/coatom poset needs at least one atom");
    std::vector<std::string> labels{"0"};
    for (int i = 1; i <= n; ++i) labels.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("q" + std::to_string(i) + "*");
    labels.push_back("1");
    const int top = 2 * n + 1;
    std::vector<FinitePoset::Cover> covers;
    for (int i = 1; i <= n; ++i) {
        covers.emplace_back(0, i);
        covers.emplace_back(n + i, top);
        for (int j = 1; j <= n; ++j)
            if (j != i) covers.emplace_back(j, n + i);
    }
    if (n == 1) covers.emplace_back(1, top);
    return FinitePoset::from_covers("AC" + std::to_string(n), std::move(labels), covers);
}

FinitePoset make_three_atom_chain_poset(const std::vector<int>& l, const std::vector<int>& m)
{
    if (l.size() != 3 || m.size() != 3) throw InputError("three chain lengths of each kind are required");
    for (int x : l)
        if (x < 1) throw InputError("atom chains need at least one element");
    for (int x : m)
        if (x < 1) throw InputError("starred chains need at least one element");

    std::vector<std::string> labels{"0"};
    std::vector<FinitePoset::Cover> covers;
    std::vector<int> bottom(6), top(6);
    auto add_chain = [&](const std::string& stem, int len, int slot) {
        for (int j = 1; j <= len; ++j) {
            labels.push_back(stem + "_" + std::to_string(j));
            const int idx = static_cast<int>(labels.size()) - 1;
            if (j == 1) bottom[static_cast<std::size_t>(slot)] = idx;
            else covers.emplace_back(idx - 1, idx);
            top[static_cast<std::size_t>(slot)] = idx;
        }
    };
    for (int i = 0; i < 3; ++i) add_chain("q" + std::to_string(i + 1), l[static_cast<std::size_t>(i)], i);
    for (int k = 0; k < 3; ++k) add_chain("q" + std::to_string(k + 1) + "*", m[static_cast<std::size_t>(k)], 3 + k);
    labels.push_back("1");
    const int one = static_cast<int>(labels.size()) - 1;

    for (int i = 0; i < 3; ++i) covers.emplace_back(0, bottom[static_cast<std::size_t>(i)]);
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i)
            if (i != k) covers.emplace_back(top[static_cast<std::size_t>(i)], bottom[static_cast<std::size_t>(3 + k)]);
        covers.emplace_back(top[static_cast<std::size_t>(3 + k)], one);
    }
    std::string name = "T";
    for (int x : l) name += std::to_string(x);
    name += "-";
    for (int x : m) name += std::to_string(x);
    return FinitePoset::from_covers(name, std::move(labels), covers);
}

}  // namespace zdg
