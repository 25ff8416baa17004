#include "zdg/quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zdg {

namespace {

bool support_before(const Support& a, const Support& b)
{
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
}

}  // namespace

QuotientPoset::QuotientPoset(FinitePoset base) : base_(std::move(base))
{
    const auto n = base_.size();
    atoms_ = members(atoms(base_));
    const auto k = atoms_.size();

    element_support_.assign(n, Support(k));
    for (std::size_t a = 0; a < k; ++a) {
        const Bits& cone = base_.up(atoms_[a]);
        for (auto x = cone.find_first(); x != Bits::npos; x = cone.find_next(x)) element_support_[x].set(a);
    }

    // Group nonzero elements by annihilator.
    std::map<Bits, std::vector<int>> groups;
    for (std::size_t x = 0; x < n; ++x) {
        if (static_cast<int>(x) == base_.zero()) continue;
        Bits ann(n);
        for (std::size_t b = 0; b < n; ++b)
            if (base_.disjoint(static_cast<int>(x), static_cast<int>(b))) ann.set(b);
        groups[ann].push_back(static_cast<int>(x));
    }

    classes_.push_back({Support(k), {base_.zero()}});
    for (auto& [ann, ms] : groups) {
        const Support& s = element_support_[static_cast<std::size_t>(ms.front())];
        for (int x : ms)
            if (element_support_[static_cast<std::size_t>(x)] != s)
                throw std::logic_error("annihilator class with mixed atom supports");
        classes_.push_back({s, std::move(ms)});
    }
    std::sort(classes_.begin() + 1, classes_.end(),
              [](const QuotientClass& a, const QuotientClass& b) { return support_before(a.support, b.support); });
    for (std::size_t c = 2; c < classes_.size(); ++c)
        if (classes_[c].support == classes_[c - 1].support)
            throw std::logic_error("two annihilator classes share an atom support");

    class_of_.assign(n, -1);
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (int x : classes_[c].members) class_of_[static_cast<std::size_t>(x)] = static_cast<int>(c);
}

std::optional<int> QuotientPoset::find_class(const Support& s) const
{
    for (std::size_t c = 1; c < classes_.size(); ++c)
        if (classes_[c].support == s) return static_cast<int>(c);
    if (s.none()) return 0;
    return std::nullopt;
}

int QuotientPoset::atom_class(int k) const
{
    Support s(atoms_.size());
    s.set(static_cast<std::size_t>(k));
    return *find_class(s);  // every atom forms its own class
}

std::optional<int> QuotientPoset::dense_class() const
{
    if (atoms_.empty()) return std::nullopt;
    Support full(atoms_.size());
    full.set();
    return find_class(full);
}

std::string QuotientPoset::label(int c) const { return support_label(cls(c).support); }

std::string support_label(const Support& s)
{
    if (s.none()) return "P_0";
    const auto ms = members(s);
    const bool wide = ms.back() >= 9;
    std::string out = wide ? "P_{" : "P_";
    for (std::size_t i = 0; i < ms.size(); ++i) out += (wide && i ? "," : "") + std::to_string(ms[i] + 1);
    return wide ? out + "}" : out;
}

QuotientPoset quotient(const FinitePoset& p) { return QuotientPoset(p); }

bool class_order_le(const QuotientPoset& q, int c1, int c2)
{
    return q.cls(c1).support.is_subset_of(q.cls(c2).support);
}

bool class_order_le_by_annihilator(const QuotientPoset& q, int c1, int c2)
{
    const auto& p = q.base();
    const auto a1 = annihilator(p, make_set(p.size(), {q.cls(c1).members.front()}));
    const auto a2 = annihilator(p, make_set(p.size(), {q.cls(c2).members.front()}));
    return a2.is_subset_of(a1);
}

bool classes_adjacent(const QuotientPoset& q, int c1, int c2)
{
    if (c1 == 0 || c2 == 0) return false;
    return !q.cls(c1).support.intersects(q.cls(c2).support);
}

int class_pseudocomplement(const QuotientPoset& q, int atom_class)
{
    const auto& s = q.cls(atom_class).support;
    if (s.count() != 1) throw InputError("class " + q.label(atom_class) + " is not an atom class");
    if (!is_zero_distributive(q.base())) throw InputError("pseudocomplement classes need a 0-distributive base");
    Support target = s;
    target.flip();
    const auto c = q.find_class(target);
    if (!c || *c == 0) throw InputError("class " + support_label(target) + " is empty");
    return *c;
}

bool quotient_is_boolean(const QuotientPoset& q)
{
    const auto k = static_cast<std::size_t>(q.atom_count());
    if (k >= 13) return false;
    // Supports are distinct, so 2^k classes means every subset occurs.
    // The class order is support inclusion, so this is the subset lattice.
    return q.class_count() == (std::size_t{1} << k);
}

FinitePoset quotient_as_poset(const QuotientPoset& q)
{
    const auto m = q.class_count();
    std::vector<std::string> labels;
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t c = 0; c < m; ++c) {
        labels.push_back(q.label(static_cast<int>(c)));
        for (std::size_t d = 0; d < m; ++d)
            if (class_order_le(q, static_cast<int>(c), static_cast<int>(d))) up[c].set(d);
    }
    return FinitePoset::from_relation("[" + q.base().name() + "]", std::move(labels), std::move(up));
}

}  // namespace zdg
