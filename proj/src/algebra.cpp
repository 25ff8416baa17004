#include "zdg/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "zdg/zdg.hpp"

namespace zdg {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

constexpr long max_zn = 1'000'000'000'000L;

std::string zn_label(long d, long n)
{
    if (d == n) return "(0)";
    return "(" + std::to_string(d) + ")";
}

std::string power_label(int e, int k)
{
    if (e == k) return "0";
    if (e == 0) return "R";
    if (e == 1) return "M";
    return "M^" + std::to_string(e);
}

std::string tuple_label(const std::vector<int>& e, const std::vector<int>& k)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += power_label(e[i], k[i]);
    }
    return s + ")";
}

std::size_t ideal_count(const std::vector<int>& k)
{
    std::size_t total = 1;
    for (int ki : k) {
        total *= static_cast<std::size_t>(ki) + 1;
        if (total > max_poset_size) throw InputError("ring has more than " + std::to_string(max_poset_size) + " ideals");
    }
    return total;
}

// Exponent tuples with the zero ideal first: the first factor is the most
// significant digit and each digit counts down from k_i.
std::vector<std::vector<int>> exponent_tuples(const std::vector<int>& k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    const std::size_t total = ideal_count(k);
    for (std::size_t t = 0; t < total; ++t) {
        out.push_back(cur);
        for (std::size_t i = k.size(); i-- > 0;) {
            if (cur[i] > 0) {
                --cur[i];
                break;
            }
            cur[i] = k[i];
        }
    }
    return out;
}

std::vector<long> divisors_descending(long n)
{
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    std::vector<long> out(large.begin(), large.end());
    out.insert(out.end(), small.rbegin(), small.rend());
    return out;
}

long parse_long(const std::string& s, const std::string& what)
{
    long v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) throw InputError("bad " + what + ": '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(static_cast<int>(parse_long(part, "index")));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

SimpleGraph relabel(const SimpleGraph& g, std::vector<std::string> labels)
{
    return SimpleGraph(std::move(labels), g.edges());
}

template <class Adjacent>
SimpleGraph definition_graph(const IdealArithmetic& a, const std::vector<int>& vertices, Adjacent adjacent)
{
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(a.label(v));
    SimpleGraph g(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::vector<int> nonzero_proper(const IdealArithmetic& a)
{
    std::vector<int> out;
    for (int i = 0; i < a.count(); ++i)
        if (i != a.zero() && i != a.whole()) out.push_back(i);
    return out;
}

}  // namespace

RingSpec RingSpec::zn(long n)
{
    if (n < 2) throw InputError("Z_n needs n >= 2, got " + std::to_string(n));
    if (n > max_zn) throw InputError("Z_n with n above " + std::to_string(max_zn) + " is not supported");
    RingSpec r;
    r.kind = Kind::zn;
    r.n = n;
    return r;
}

RingSpec RingSpec::artinian_pir(std::vector<int> indices)
{
    if (indices.empty()) throw InputError("ArtinianPIR needs at least one nilpotency index");
    for (int k : indices)
        if (k < 1) throw InputError("nilpotency indices must be >= 1, got " + std::to_string(k));
    ideal_count(indices);
    RingSpec r;
    r.kind = Kind::artinian_pir;
    r.indices = std::move(indices);
    return r;
}

RingSpec RingSpec::local_chain(int length)
{
    if (length < 1) throw InputError("LocalChain length must be >= 1, got " + std::to_string(length));
    auto r = artinian_pir({length});
    r.kind = Kind::local_chain;
    return r;
}

std::string RingSpec::name() const
{
    if (kind == Kind::zn) return "Z_" + std::to_string(n);
    std::string s = kind == Kind::local_chain ? "Chain[" : "PIR[";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s + "]";
}

GroupSpec GroupSpec::cyclic(long n)
{
    if (n < 2) throw InputError("cyclic group order must be >= 2, got " + std::to_string(n));
    if (n > max_zn) throw InputError("cyclic group order above " + std::to_string(max_zn) + " is not supported");
    return GroupSpec{n};
}

std::vector<std::pair<long, int>> factorize(long n)
{
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.emplace_back(p, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<int> local_factor_indices(const RingSpec& r)
{
    if (r.kind != RingSpec::Kind::zn) return r.indices;
    std::vector<int> out;
    for (const auto& [p, a] : factorize(r.n)) out.push_back(a);
    return out;
}

int maximal_ideal_count(const RingSpec& r) { return static_cast<int>(local_factor_indices(r).size()); }

FinitePoset ideal_lattice(const RingSpec& r)
{
    std::vector<std::string> labels;
    std::vector<Bits> up;
    if (r.kind == RingSpec::Kind::zn) {
        const auto ds = divisors_descending(r.n);
        if (ds.size() > max_poset_size) throw InputError("ring has too many ideals");
        for (long d : ds) labels.push_back(zn_label(d, r.n));
        // (d) is contained in (e) iff e | d.
        for (long d : ds) {
            Bits row(ds.size());
            for (std::size_t j = 0; j < ds.size(); ++j)
                if (d % ds[j] == 0) row.set(j);
            up.push_back(std::move(row));
        }
    } else {
        const auto ts = exponent_tuples(r.indices);
        for (const auto& t : ts) labels.push_back(tuple_label(t, r.indices));
        for (const auto& t : ts) {
            Bits row(ts.size());
            for (std::size_t j = 0; j < ts.size(); ++j) {
                bool inside = true;
                for (std::size_t f = 0; f < t.size(); ++f) inside = inside && t[f] >= ts[j][f];
                if (inside) row.set(j);
            }
            up.push_back(std::move(row));
        }
    }
    return FinitePoset::from_relation("Id(" + r.name() + ")", std::move(labels), std::move(up));
}

SimpleGraph comaximal_graph(const RingSpec& r) { return zdg(dual(ideal_lattice(r))); }

SimpleGraph comaximal_graph_star(const RingSpec& r) { return zdg_star(dual(ideal_lattice(r))); }

AnnihilatingGraphs annihilating_and_coannihilating(const RingSpec& r)
{
    AnnihilatingGraphs out{comaximal_graph_star(r), {}};
    out.annihilating = complement(out.coannihilating);
    if (!same_labelled_graph(out.coannihilating, coannihilating_by_definition(r)))
        throw std::logic_error("CAG* of " + r.name() + " differs from CG*");
    if (!same_labelled_graph(out.annihilating, annihilating_by_definition(r)))
        throw std::logic_error("AG* of " + r.name() + " differs from the complement of CG*");
    return out;
}

SimpleGraph intersection_graph(const RingSpec& r) { return complement(zdg_star(ideal_lattice(r))); }

SimpleGraph subgroup_intersection_graph(const GroupSpec& g)
{
    const auto ig = intersection_graph(RingSpec::zn(g.order));
    std::vector<std::string> labels;
    for (const auto& l : ig.labels()) labels.push_back("<" + l.substr(1, l.size() - 2) + ">");
    return relabel(ig, std::move(labels));
}

IdealArithmetic::IdealArithmetic(const RingSpec& r)
{
    if (r.kind == RingSpec::Kind::zn) {
        for (const auto& [p, a] : factorize(r.n)) {
            primes_.push_back(p);
            k_.push_back(a);
        }
    } else {
        k_ = r.indices;
    }
    // Enumerate every exponent tuple in odometer order.
    std::vector<int> e(k_.size(), 0);
    for (;;) {
        exps_.push_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == k_[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
        if (exps_.size() > max_poset_size) throw InputError("ring has too many ideals");
    }
    for (const auto& t : exps_) {
        if (primes_.empty()) {
            labels_.push_back(tuple_label(t, k_));
            continue;
        }
        long d = 1;
        for (std::size_t j = 0; j < t.size(); ++j)
            for (int c = 0; c < t[j]; ++c) d *= primes_[j];
        labels_.push_back(zn_label(d, r.n));
    }
    zero_ = index_of(k_);
    whole_ = index_of(std::vector<int>(k_.size(), 0));
}

int IdealArithmetic::index_of(const std::vector<int>& exps) const
{
    const auto it = std::find(exps_.begin(), exps_.end(), exps);
    if (it == exps_.end()) throw std::logic_error("ideal not found");
    return static_cast<int>(it - exps_.begin());
}

int IdealArithmetic::sum(int a, int b) const
{
    // gcd of generators: smaller exponents.
    std::vector<int> e(k_.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::min(exps_[ix(a)][j], exps_[ix(b)][j]);
    return index_of(e);
}

int IdealArithmetic::intersection(int a, int b) const
{
    // lcm of generators: larger exponents.
    std::vector<int> e(k_.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(exps_[ix(a)][j], exps_[ix(b)][j]);
    return index_of(e);
}

int IdealArithmetic::annihilator(int a) const
{
    // Ann((d)) = (n/d); in a chain of index k, Ann(M^e) = M^(k-e).
    std::vector<int> e(k_.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = k_[j] - exps_[ix(a)][j];
    return index_of(e);
}

bool IdealArithmetic::in_jacobson(int a) const
{
    const auto& e = exps_[ix(a)];
    return std::all_of(e.begin(), e.end(), [](int x) { return x >= 1; });
}

SimpleGraph comaximal_by_definition(const RingSpec& r)
{
    const IdealArithmetic a(r);
    std::vector<int> vs;
    for (int i = 0; i < a.count(); ++i) {
        if (i == a.whole()) continue;
        bool partner = false;
        for (int j = 0; j < a.count() && !partner; ++j) partner = j != a.whole() && a.sum(i, j) == a.whole();
        if (partner) vs.push_back(i);
    }
    return definition_graph(a, vs, [&](int i, int j) { return a.sum(i, j) == a.whole(); });
}

SimpleGraph comaximal_star_by_definition(const RingSpec& r)
{
    const IdealArithmetic a(r);
    return definition_graph(a, nonzero_proper(a), [&](int i, int j) { return a.sum(i, j) == a.whole(); });
}

SimpleGraph coannihilating_by_definition(const RingSpec& r)
{
    const IdealArithmetic a(r);
    return definition_graph(a, nonzero_proper(a), [&](int i, int j) {
        return a.intersection(a.annihilator(i), a.annihilator(j)) == a.zero();
    });
}

SimpleGraph annihilating_by_definition(const RingSpec& r)
{
    const IdealArithmetic a(r);
    return definition_graph(a, nonzero_proper(a),
                            [&](int i, int j) { return a.annihilator(a.sum(i, j)) != a.zero(); });
}

SimpleGraph intersection_by_definition(const RingSpec& r)
{
    const IdealArithmetic a(r);
    return definition_graph(a, nonzero_proper(a), [&](int i, int j) { return a.intersection(i, j) != a.zero(); });
}

int jacobson_ideal_count(const RingSpec& r)
{
    const IdealArithmetic a(r);
    int m = 0;
    for (int i : nonzero_proper(a))
        if (a.in_jacobson(i)) ++m;
    return m;
}

bool same_labelled_graph(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::map<std::string, int> where;
    for (int v = 0; v < b.order(); ++v) where[b.label(v)] = v;
    if (static_cast<int>(where.size()) != b.order()) return false;
    std::vector<int> to(ix(a.order()));
    for (int v = 0; v < a.order(); ++v) {
        const auto it = where.find(a.label(v));
        if (it == where.end()) return false;
        to[ix(v)] = it->second;
    }
    for (const auto& [u, v] : a.edges())
        if (!b.adjacent(to[ix(u)], to[ix(v)])) return false;
    return true;
}

RingSpec parse_ring_spec(const std::string& text)
{
    if (text.rfind("pir:", 0) == 0) return RingSpec::artinian_pir(parse_int_list(text.substr(4)));
    if (text.rfind("chain:", 0) == 0) return RingSpec::local_chain(static_cast<int>(parse_long(text.substr(6), "length")));
    return RingSpec::zn(parse_long(text, "ring order"));
}

}  // namespace zdg
