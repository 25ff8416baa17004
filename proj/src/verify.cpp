#include "zdg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zdg/algebra.hpp"
#include "zdg/constructive.hpp"
#include "zdg/io.hpp"
#include "zdg/quotient.hpp"
#include "zdg/zdg.hpp"

namespace zdg {

namespace {

struct Instance {
    std::string key;
    std::optional<FinitePoset> poset;
    std::vector<int> chain_sizes;  // empty unless a product of chains
    std::optional<RingSpec> ring;
};

struct Outcome {
    ClassificationReport report;
    std::vector<VerificationFailure> failures;
};

std::string pad(long v, int width = 4)
{
    std::ostringstream s;
    s << std::setw(width) << std::setfill('0') << v;
    return s.str();
}

std::string tuple_key(const std::string& prefix, const std::vector<int>& xs)
{
    std::string s = prefix + ":";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + pad(xs[i]);
    return s;
}

std::string b(bool v) { return v ? "true" : "false"; }

bool applies(Family f, const std::string& check)
{
    const bool ring = f == Family::zn || f == Family::pir;
    if (check == "artinian-identity" || check == "ring-classification") return ring;
    if (check == "coloring" || check == "quotient-structure") return f == Family::chain_products || f == Family::boolean;
    return true;
}

void enumerate_pir(int max_factors, int max_index, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_factors) return;
    for (int k = cur.empty() ? 1 : cur.back(); k <= max_index; ++k) {
        cur.push_back(k);
        enumerate_pir(max_factors, max_index, cur, out);
        cur.pop_back();
    }
}

std::vector<Instance> build_instances(Family f, const VerifyBounds& bounds)
{
    std::vector<Instance> out;
    switch (f) {
    case Family::chain_products:
        for (auto& s : chain_product_family(bounds.max_factors, bounds.max_graph_vertices))
            out.push_back({tuple_key("chain", s), make_chain_product(s), s, std::nullopt});
        break;
    case Family::boolean:
        for (int n = 1; n <= bounds.max_atoms; ++n)
            out.push_back({"boolean:" + pad(n), make_boolean(n), std::vector<int>(static_cast<std::size_t>(n), 2),
                           std::nullopt});
        break;
    case Family::zn:
        for (long n = 2; n <= bounds.max_n; ++n)
            out.push_back({"zn:" + pad(n, 8), std::nullopt, {}, RingSpec::zn(n)});
        break;
    case Family::pir: {
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        enumerate_pir(bounds.max_factors, bounds.max_index, cur, tuples);
        std::sort(tuples.begin(), tuples.end());
        for (auto& t : tuples) {
            long ideals = 1;
            for (int k : t) ideals *= k + 1;
            if (ideals - 2 > bounds.max_ring_graph_vertices) continue;
            out.push_back({tuple_key("pir", t), std::nullopt, {}, RingSpec::artinian_pir(t)});
        }
        break;
    }
    case Family::corpus_file: {
        if (bounds.corpus_path.empty()) throw InputError("corpus-file family needs --corpus <path>");
        const auto text = read_file(bounds.corpus_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error&) {
            poset_from_json(text);  // rethrows with a line/column diagnostic
            throw;
        }
        const auto items = doc.is_array() ? doc : nlohmann::json::array({doc});
        int i = 0;
        for (const auto& item : items) {
            auto p = poset_from_json(item.dump());
            out.push_back({"corpus:" + pad(i++) + ":" + p.name(), std::move(p), {}, std::nullopt});
        }
        break;
    }
    }
    return out;
}

class Checker {
public:
    Checker(const Instance& in, const VerifyBounds& bounds, Outcome& out) : in_(in), bounds_(bounds), out_(out) {}

    void fail(const std::string& theorem, const std::string& expected, const std::string& actual)
    {
        out_.failures.push_back({out_.report.instance, theorem, expected, actual});
    }

    void flags(const std::string& prefix)
    {
        for (const auto& [name, ok] : out_.report.agreement)
            if (name.rfind(prefix, 0) == 0 && !ok) fail(name, "prediction", "generic result differs");
    }

    void expect_eq(const std::string& theorem, long expected, long actual)
    {
        if (expected != actual) fail(theorem, std::to_string(expected), std::to_string(actual));
    }

    void chordal_theorem()
    {
        if (in_.ring) {
            flags("ring-chordal");
            flags("ring-complement-chordal");
            flags("ig-chordal");
            flags("ig-complement-chordal");
            return;
        }
        flags("chordal-theorem");
        flags("complement-chordal-theorem");
    }

    void perfect_theorem()
    {
        flags(in_.ring ? "ring-perfect" : "perfect-theorem");
        if (in_.ring) flags("ig-perfect");
    }

    void coloring()
    {
        const auto& r = out_.report;
        const int n = static_cast<int>(in_.chain_sizes.size());
        if (n < 2) return;
        expect_eq("clique-equals-atoms", n, *r.clique);
        expect_eq("chi-equals-atoms", n, *r.chi);
        expect_eq("class-one", r.max_degree, *r.chi_prime);
        if (!r.chi2_exact()) {
            fail("total-type", "exact chi''", "above the exact-search cap");
            return;
        }
        const int want = r.max_degree + (classify_type(in_.chain_sizes) == TotalType::two ? 2 : 1);
        expect_eq("total-type", want, *r.chi2_upper);
    }

    void tcc(const SimpleGraph& g, const std::string& what)
    {
        if (g.order() == 0) return;
        const int delta = g.max_degree();
        const auto t = total_coloring(g, bounds_.limits);
        if (t.exact) {
            if (t.upper > delta + 2) fail("tcc " + what, "<= " + std::to_string(delta + 2), std::to_string(t.upper));
            return;
        }
        if (t.upper <= delta + 2) return;
        if (!find_total_coloring(g, delta + 2, 2'000'000))
            fail("tcc " + what, "<= " + std::to_string(delta + 2), "no coloring found within the search budget");
    }

    void tcc()
    {
        if (in_.ring) {
            const auto g = comaximal_graph_star(*in_.ring);
            tcc(g, "CG*");
            tcc(complement(g), "CG*^c");
            return;
        }
        const auto& p = *in_.poset;
        tcc(zdg(p), "G(P)");
        if (!is_zero_distributive(p) || atoms(p).count() < 2) return;
        const auto gc = complement(zdg(p));
        if (gc.order() <= bounds_.limits.max_vertices && static_cast<int>(gc.edge_count()) <= bounds_.limits.max_edges) {
            tcc(gc, "G^c(P)");
            return;
        }
        try {
            const auto c = complement_total_coloring(p);
            if (c.assignment.color_count > c.delta + 2)
                fail("tcc G^c(P)", "<= " + std::to_string(c.delta + 2), std::to_string(c.assignment.color_count));
        } catch (const ConstructionRefused& e) {
            fail("tcc G^c(P)", "<= Delta+2", e.what());
        }
    }

    void quotient_structure()
    {
        const auto q = quotient(*in_.poset);
        const auto n = in_.chain_sizes.size();
        if (!quotient_is_boolean(q)) {
            fail("quotient-boolean", "true", "false");
            return;
        }
        expect_eq("quotient-class-count", 1L << n, static_cast<long>(q.class_count()));
        // Atom k is the element with a single nonzero coordinate; decode its
        // index (first factor most significant) to find which factor that is.
        std::vector<int> factor_of(n, -1);
        for (std::size_t k = 0; k < n; ++k) {
            int x = q.atom_indices()[k];
            for (std::size_t i = n; i-- > 0;) {
                if (x % in_.chain_sizes[i]) factor_of[k] = static_cast<int>(i);
                x /= in_.chain_sizes[i];
            }
        }
        for (std::size_t c = 0; c < q.class_count(); ++c) {
            const auto& cls = q.cls(static_cast<int>(c));
            long want = 1;
            for (std::size_t k = 0; k < n; ++k)
                if (cls.support.test(k)) want *= in_.chain_sizes[static_cast<std::size_t>(factor_of[k])] - 1;
            expect_eq("quotient-class-size " + q.label(static_cast<int>(c)), want, static_cast<long>(cls.members.size()));
        }
    }

    void reductions(const SimpleGraph& g, const std::string& what)
    {
        const bool c = is_chordal(g);
        const bool p = is_perfect(g);
        for (const auto& [name, h] : {std::pair{"simeq", reduce_simeq(g)}, std::pair{"theta", reduce_theta(g)}}) {
            if (std::string(name) == "simeq" && is_chordal(h) != c)
                fail("chordal-reduction " + what + " " + name, b(c), b(!c));
            if (is_perfect(h) != p) fail("perfect-reduction " + what + " " + name, b(p), b(!p));
        }
    }

    void reductions()
    {
        const auto g = in_.ring ? comaximal_graph_star(*in_.ring) : zdg(*in_.poset);
        reductions(g, "G");
        reductions(complement(g), "G^c");
    }

    void artinian_identity()
    {
        const auto& r = *in_.ring;
        const auto cg = comaximal_graph(r);
        const auto cgs = comaximal_graph_star(r);
        if (!same_labelled_graph(cg, comaximal_by_definition(r))) fail("CG = G(dual)", "equal", "differs");
        if (!same_labelled_graph(cgs, comaximal_star_by_definition(r))) fail("CG* by definition", "equal", "differs");
        if (!same_labelled_graph(intersection_graph(r), intersection_by_definition(r)))
            fail("IG = complement of G*", "equal", "differs");
        try {
            annihilating_and_coannihilating(r);
        } catch (const std::logic_error& e) {
            fail("CG* = CAG* = AG*^c", "equal", e.what());
        }
        // CG* = CG + I_m with m counted inside J(R).
        const int m = jacobson_ideal_count(r);
        expect_eq("CG* = CG + I_m order", cg.order() + m, cgs.order());
        std::vector<int> keep;
        int isolated_extra = 0;
        for (int v = 0; v < cgs.order(); ++v) {
            const bool in_cg = std::find(cg.labels().begin(), cg.labels().end(), cgs.label(v)) != cg.labels().end();
            if (in_cg) keep.push_back(v);
            else if (cgs.degree(v) == 0) ++isolated_extra;
        }
        expect_eq("CG* = CG + I_m isolated", m, isolated_extra);
        if (!same_labelled_graph(cgs.induced(keep), cg)) fail("CG* = CG + I_m", "CG induced", "differs");
        // The lattice is a product of chains, so G(L) and G(dual L) agree.
        const auto lat = ideal_lattice(r);
        const auto g1 = zdg(lat);
        if (g1.order() <= 16 && !isomorphic(g1, zdg(dual(lat)))) fail("G(L) = G(dual L)", "isomorphic", "not isomorphic");
    }

    void ring_classification() { flags(""); }

private:
    const Instance& in_;
    const VerifyBounds& bounds_;
    Outcome& out_;
};

Outcome evaluate(const Instance& in, const std::vector<std::string>& checks, const VerifyBounds& bounds)
{
    auto has = [&](const char* c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
    ReportOptions opts;
    opts.limits = bounds.limits;
    opts.clique = opts.chi = opts.chi_prime = opts.chi_double_prime = has("coloring");
    Outcome out;
    if (in.ring) {
        const auto order = comaximal_graph_star(*in.ring).order();
        if (order > bounds.max_ring_graph_vertices) {
            opts.chordal = opts.perfect = false;
        }
        out.report = classify_family(*in.ring, opts, in.key);
    } else {
        out.report = classify_poset(*in.poset, opts, in.key);
    }
    Checker c(in, bounds, out);
    try {
        if (has("chordal-theorem")) c.chordal_theorem();
        if (has("perfect-theorem")) c.perfect_theorem();
        if (has("coloring")) c.coloring();
        if (has("tcc")) c.tcc();
        if (has("quotient-structure")) c.quotient_structure();
        if (has("reductions")) c.reductions();
        if (has("artinian-identity")) c.artinian_identity();
        if (has("ring-classification")) c.ring_classification();
    } catch (const std::exception& e) {
        c.fail("exception", "none", e.what());
    }
    return out;
}

}  // namespace

Family parse_family(const std::string& name)
{
    if (name == "chain-products") return Family::chain_products;
    if (name == "boolean") return Family::boolean;
    if (name == "zn") return Family::zn;
    if (name == "pir") return Family::pir;
    if (name == "corpus-file") return Family::corpus_file;
    throw InputError("unknown family '" + name + "'");
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::chain_products: return "chain-products";
    case Family::boolean: return "boolean";
    case Family::zn: return "zn";
    case Family::pir: return "pir";
    case Family::corpus_file: return "corpus-file";
    }
    return "?";
}

const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names{"chordal-theorem", "perfect-theorem",   "coloring",
                                                "tcc",             "quotient-structure", "reductions",
                                                "artinian-identity", "ring-classification"};
    return names;
}

long chain_product_zdg_order(const std::vector<int>& sizes)
{
    long all = 1, nonzero = 1;
    for (int s : sizes) {
        all *= s;
        nonzero *= s - 1;
    }
    return all - nonzero - 1;
}

std::vector<std::vector<int>> chain_product_family(int max_factors, int max_vertices)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const int max_size = std::max(2, max_vertices);
    std::function<void()> rec = [&] {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_factors) return;
        for (int s = cur.empty() ? 2 : cur.back(); s <= max_size; ++s) {
            cur.push_back(s);
            const bool fits = chain_product_zdg_order(cur) <= max_vertices;
            if (fits) rec();
            cur.pop_back();
            if (!fits) break;  // the order grows with s
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

VerificationRun run_verification(Family family, std::vector<std::string> checks, const VerifyBounds& bounds)
{
    std::vector<std::string> expanded;
    for (const auto& c : checks) {
        if (c == "all") {
            for (const auto& k : known_checks())
                if (applies(family, k)) expanded.push_back(k);
            continue;
        }
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw InputError("unknown check '" + c + "'");
        if (!applies(family, c)) throw InputError("check '" + c + "' does not apply to family " + family_name(family));
        expanded.push_back(c);
    }
    std::sort(expanded.begin(), expanded.end());
    expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());

    VerificationRun run;
    run.family = family;
    run.bounds = bounds;
    run.checks = expanded;
    const auto instances = build_instances(family, bounds);

    std::vector<Outcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
            outcomes[i] = evaluate(instances[i], expanded, bounds);
    };
    const int jobs = std::max(1, std::min<int>(bounds.jobs, static_cast<int>(instances.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<std::size_t> order(instances.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return outcomes[a].report.key < outcomes[b].report.key; });
    for (auto i : order) {
        run.results.push_back(std::move(outcomes[i].report));
        for (auto& f : outcomes[i].failures) run.failures.push_back(std::move(f));
    }
    return run;
}

}  // namespace zdg
