// zdgraph: command-line front end for the zdg library.
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdg/algebra.hpp"
#include "zdg/analysis.hpp"
#include "zdg/constructive.hpp"
#include "zdg/io.hpp"
#include "zdg/quotient.hpp"
#include "zdg/report.hpp"
#include "zdg/verify.hpp"
#include "zdg/zdg.hpp"

namespace {

using namespace zdg;

enum Exit { ok = 0, verification_failed = 1, size_cap = 2, input_error = 3 };

struct Global {
    bool json = false;
    bool dot = false;
    std::string out;
    int max_exact_vertices = 14;
    int max_exact_edges = 40;
    int jobs = 1;

    SearchLimits limits() const { return {max_exact_vertices, max_exact_edges}; }
};

Global global;

void emit(const std::string& text)
{
    if (global.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(global.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + global.out);
    f << text;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

long parse_long(const std::string& s)
{
    long v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) throw InputError("expected an integer, got '" + s + "'");
    return v;
}

std::vector<int> parse_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(static_cast<int>(parse_long(part)));
    if (out.empty()) throw InputError("expected a comma separated list, got '" + s + "'");
    return out;
}

FinitePoset load_poset(const std::string& path) { return poset_from_json(read_file(path)); }

std::string graph_output(const SimpleGraph& g, const std::string& name)
{
    return global.dot ? to_dot(g) : graph_to_json(g, name);
}

// ---- gen -------------------------------------------------------------------

FinitePoset generate(const std::string& kind, const std::vector<std::string>& args)
{
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw InputError("gen " + kind + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    };
    if (kind == "chain") {
        need(1);
        return make_chain(static_cast<int>(parse_long(args[0])));
    }
    if (kind == "chain-product") {
        need(1);
        return make_chain_product(parse_list(args[0]));
    }
    if (kind == "boolean") {
        need(1);
        return make_boolean(static_cast<int>(parse_long(args[0])));
    }
    if (kind == "divisor-lattice") {
        need(1);
        return make_divisor_lattice(parse_long(args[0]));
    }
    if (kind == "atom-coatom") {
        need(1);
        return make_atom_coatom_poset(static_cast<int>(parse_long(args[0])));
    }
    if (kind == "three-atom") {
        need(2);
        return make_three_atom_chain_poset(parse_list(args[0]), parse_list(args[1]));
    }
    if (kind == "ideal-lattice") {
        need(1);
        return ideal_lattice(parse_ring_spec(args[0]));
    }
    throw InputError("unknown poset kind '" + kind + "'");
}

// ---- quotient --------------------------------------------------------------

std::string quotient_text(const QuotientPoset& q)
{
    const auto& p = q.base();
    if (global.json) {
        nlohmann::ordered_json j;
        j["name"] = p.name();
        j["atoms"] = nlohmann::ordered_json::array();
        for (int a : q.atom_indices()) j["atoms"].push_back(p.label(a));
        j["classes"] = nlohmann::ordered_json::array();
        for (int c = 0; c < static_cast<int>(q.class_count()); ++c) {
            nlohmann::ordered_json cj;
            cj["label"] = q.label(c);
            cj["size"] = q.cls(c).members.size();
            cj["members"] = nlohmann::ordered_json::array();
            for (int x : q.cls(c).members) cj["members"].push_back(p.label(x));
            j["classes"].push_back(cj);
        }
        j["boolean"] = quotient_is_boolean(q);
        return j.dump(2) + "\n";
    }
    std::ostringstream s;
    s << "support\tsize\tmembers\n";
    for (int c = 0; c < static_cast<int>(q.class_count()); ++c) {
        s << q.label(c) << "\t" << q.cls(c).members.size() << "\t";
        bool first = true;
        for (int x : q.cls(c).members) {
            s << (first ? "" : " ") << p.label(x);
            first = false;
        }
        s << "\n";
    }
    return s.str();
}

// ---- graph -----------------------------------------------------------------

SimpleGraph derive_graph(const std::string& kind, const FinitePoset& p)
{
    if (kind == "zdg") return zdg::zdg(p);
    if (kind == "zdg-star") return zdg_star(p);
    if (kind == "complement") return complement(zdg::zdg(p));
    if (kind == "quotient") return quotient_graph(quotient(p));
    if (kind == "reduce-simeq") return reduce_simeq(zdg::zdg(p));
    if (kind == "reduce-theta") return reduce_theta(zdg::zdg(p));
    throw InputError("unknown graph kind '" + kind + "'");
}

// A graph document as is, or the zero-divisor graph of a poset document.
SimpleGraph load_graph(const std::string& path, std::string* name = nullptr)
{
    const auto text = read_file(path);
    if (document_kind(text) == DocumentKind::graph) {
        if (name) *name = std::filesystem::path(path).stem().string();
        return graph_from_json(text);
    }
    const auto p = poset_from_json(text);
    if (name) *name = p.name();
    return zdg::zdg(p);
}

// ---- color -----------------------------------------------------------------

std::string assignment_csv(const SimpleGraph& g, const ColoringAssignment& a)
{
    std::ostringstream s;
    s << "element,color\n";
    for (std::size_t v = 0; v < a.vertex_color.size(); ++v)
        s << csv_field(g.label(static_cast<int>(v))) << "," << a.vertex_color[v] << "\n";
    for (const auto& [e, c] : a.edge_color) s << csv_field(g.label(e.first) + "-" + g.label(e.second)) << "," << c << "\n";
    return s.str();
}

int cmd_color(const std::string& kind, const std::string& path)
{
    if (kind == "complement-total") {
        const auto p = load_poset(path);
        const auto r = complement_total_coloring(p);
        const auto check = check_coloring(r.graph, r.assignment);
        std::ostringstream s;
        s << assignment_csv(r.graph, r.assignment);
        s << "colors=" << r.assignment.color_count << " delta=" << r.delta << " bound=" << r.delta + 2
          << " valid=" << (check.valid ? "true" : "false") << "\n";
        emit(s.str());
        std::cerr << "construction: " << path_name(r.path) << "\n";
        return check.valid ? ok : verification_failed;
    }
    std::string name;
    const auto g = load_graph(path, &name);
    ColoringAssignment a;
    int code = ok;
    bool exact = true;
    if (kind == "vertex") a = chromatic(g).assignment;
    else if (kind == "edge") a = edge_chromatic(g).assignment;
    else if (kind == "total") {
        auto t = total_coloring(g, global.limits());
        exact = t.exact;
        a = std::move(t.assignment);
        if (!exact) code = size_cap;
    } else {
        throw InputError("unknown coloring kind '" + kind + "'");
    }
    const auto check = check_coloring(g, a);
    std::ostringstream s;
    s << assignment_csv(g, a);
    s << "colors=" << a.color_count << " delta=" << g.max_degree() << " exact=" << (exact ? "true" : "false")
      << " valid=" << (check.valid ? "true" : "false") << "\n";
    emit(s.str());
    if (!exact) std::cerr << "exact search refused: above the size cap, greedy coloring shown\n";
    return check.valid ? code : verification_failed;
}

// ---- ring / group ----------------------------------------------------------

SimpleGraph ring_graph(const std::string& kind, const RingSpec& r)
{
    if (kind == "comaximal") return comaximal_graph(r);
    if (kind == "comaximal-star") return comaximal_graph_star(r);
    if (kind == "intersection") return intersection_graph(r);
    if (kind == "annihilating") return annihilating_and_coannihilating(r).annihilating;
    if (kind == "coannihilating") return annihilating_and_coannihilating(r).coannihilating;
    throw InputError("unknown ring graph kind '" + kind + "'");
}

int ring_output(const SimpleGraph& g, const std::string& name, const RingSpec& r, bool report)
{
    if (!report) {
        emit(graph_output(g, name));
        return ok;
    }
    ReportOptions opts;
    opts.limits = global.limits();
    const auto rep = classify_family(r, opts);
    emit(global.json ? to_json(rep) + "\n" : csv_header() + "\n" + to_csv(rep) + "\n");
    return rep.agrees() ? ok : verification_failed;
}

// ---- verify ----------------------------------------------------------------

int print_run(const VerificationRun& run)
{
    std::ostringstream s;
    if (global.json) {
        nlohmann::ordered_json j;
        j["family"] = family_name(run.family);
        j["checks"] = run.checks;
        j["results"] = nlohmann::ordered_json::array();
        for (const auto& r : run.results) j["results"].push_back(nlohmann::ordered_json::parse(to_json(r)));
        j["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : run.failures)
            j["failures"].push_back({{"instance", f.instance}, {"theorem", f.theorem}, {"expected", f.expected},
                                     {"actual", f.actual}});
        j["passed"] = run.passed();
        s << j.dump(2) << "\n";
    } else {
        s << csv_header() << "\n";
        for (const auto& r : run.results) s << to_csv(r) << "\n";
    }
    emit(s.str());
    for (const auto& f : run.failures)
        std::cerr << "FAIL " << f.instance << ": " << f.theorem << " expected " << f.expected << ", got " << f.actual
                  << "\n";
    std::cerr << family_name(run.family) << ": " << run.results.size() << " instances, " << run.failures.size()
              << " failures\n";
    return run.passed() ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero-divisor graphs of finite posets: construction, classification and coloring"};
    app.require_subcommand(1);
    app.add_flag("--json", global.json, "Emit JSON");
    app.add_flag("--dot", global.dot, "Emit Graphviz DOT for graphs");
    app.add_option("--out", global.out, "Write output to this file");
    app.add_option("--max-exact-vertices", global.max_exact_vertices, "Exact total coloring vertex cap")
        ->capture_default_str();
    app.add_option("--max-exact-edges", global.max_exact_edges, "Exact total coloring edge cap")->capture_default_str();
    app.add_option("--jobs", global.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

    std::function<int()> action;
    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    std::string kind, path, arg;
    std::vector<std::string> args;

    auto* gen = sub("gen", "Generate a poset: chain N, chain-product A,B,.., boolean N, divisor-lattice N, "
                           "atom-coatom N, three-atom L1,L2,L3 M1,M2,M3, ideal-lattice RING");
    gen->add_option("kind", kind)->required();
    gen->add_option("args", args)->required();
    gen->callback([&] { action = [&] { return emit(poset_to_json(generate(kind, args))), ok; }; });

    auto* quo = sub("quotient", "Print the quotient classes of a poset");
    quo->add_option("poset", path)->required();
    quo->callback([&] { action = [&] { return emit(quotient_text(quotient(load_poset(path)))), ok; }; });

    auto* gr = sub("graph", "Derive a graph from a poset: zdg, zdg-star, complement, quotient, reduce-simeq, reduce-theta");
    gr->add_option("kind", kind)->required();
    gr->add_option("poset", path)->required();
    gr->callback([&] {
        action = [&] {
            const auto p = load_poset(path);
            return emit(graph_output(derive_graph(kind, p), kind + "(" + p.name() + ")")), ok;
        };
    });

    bool a_chordal = false, a_perfect = false, a_chi = false, a_chi_prime = false, a_chi2 = false;
    auto* an = sub("analyze", "Classify a graph, or the zero-divisor graph of a poset, as one CSV record");
    an->add_option("input", path)->required();
    an->add_flag("--chordal", a_chordal);
    an->add_flag("--perfect", a_perfect);
    an->add_flag("--chi", a_chi);
    an->add_flag("--chi-prime", a_chi_prime);
    an->add_flag("--chi-double-prime", a_chi2);
    an->callback([&] {
        action = [&] {
            ReportOptions opts;
            const bool any = a_chordal || a_perfect || a_chi || a_chi_prime || a_chi2;
            if (any) {
                opts.chordal = a_chordal;
                opts.perfect = a_perfect;
                opts.clique = opts.chi = a_chi;
                opts.chi_prime = a_chi_prime;
                opts.chi_double_prime = a_chi2;
            }
            opts.limits = global.limits();
            const auto text = read_file(path);
            ClassificationReport r;
            if (document_kind(text) == DocumentKind::poset) {
                r = classify_poset(poset_from_json(text), opts);
            } else {
                const auto g = graph_from_json(text);
                r = classify_graph(g, opts, std::filesystem::path(path).stem().string(), "");
            }
            emit(global.json ? to_json(r) + "\n" : to_csv(r) + "\n");
            if (opts.chi_double_prime && !r.chi2_exact()) {
                std::cerr << "exact search refused: chi'' reported as an interval\n";
                return static_cast<int>(size_cap);
            }
            return static_cast<int>(r.agrees() ? ok : verification_failed);
        };
    });

    auto* col = sub("color", "Color a graph or poset: vertex, edge, total, complement-total");
    col->add_option("kind", kind)->required();
    col->add_option("input", path)->required();
    col->callback([&] { action = [&] { return cmd_color(kind, path); }; });

    bool report = false;
    auto* ring = sub("ring", "Ring graphs: comaximal|comaximal-star|intersection|annihilating|coannihilating N, "
                             "or pir K1,K2,.. KIND");
    ring->add_option("kind", kind)->required();
    ring->add_option("args", args)->required();
    ring->add_flag("--report", report, "Print the classification report instead of the graph");
    ring->callback([&] {
        action = [&] {
            if (kind == "pir") {
                if (args.size() != 2) throw InputError("ring pir takes K1,K2,.. and a graph kind");
                const auto r = RingSpec::artinian_pir(parse_list(args[0]));
                return ring_output(ring_graph(args[1], r), args[1] + "(" + r.name() + ")", r, report);
            }
            if (args.size() != 1) throw InputError("ring " + kind + " takes one ring argument");
            const auto r = parse_ring_spec(args[0]);
            return ring_output(ring_graph(kind, r), kind + "(" + r.name() + ")", r, report);
        };
    });

    auto* grp = sub("group", "Subgroup graphs of a cyclic group: intersection N");
    grp->add_option("kind", kind)->required();
    grp->add_option("order", arg)->required();
    grp->add_flag("--report", report, "Print the classification report of the matching ring instead");
    grp->callback([&] {
        action = [&] {
            if (kind != "intersection") throw InputError("unknown group graph kind '" + kind + "'");
            const auto gs = GroupSpec::cyclic(parse_long(arg));
            return ring_output(subgroup_intersection_graph(gs), "IG(C_" + arg + ")", RingSpec::zn(gs.order), report);
        };
    });

    std::string family = "chain-products";
    VerifyBounds bounds;
    auto* ver = sub("verify", "Check theorem predictions over a family; checks: all, chordal-theorem, perfect-theorem, "
                              "coloring, tcc, quotient-structure, reductions, artinian-identity, ring-classification");
    ver->add_option("checks", args)->required();
    ver->add_option("--family", family, "chain-products, boolean, zn, pir or corpus-file")->capture_default_str();
    ver->add_option("--max-graph-vertices", bounds.max_graph_vertices)->capture_default_str();
    ver->add_option("--max-factors", bounds.max_factors)->capture_default_str();
    ver->add_option("--max-atoms", bounds.max_atoms)->capture_default_str();
    ver->add_option("--max-n", bounds.max_n)->capture_default_str();
    ver->add_option("--max-index", bounds.max_index)->capture_default_str();
    ver->add_option("--corpus", bounds.corpus_path, "Poset JSON file for corpus-file");
    ver->callback([&] {
        action = [&] {
            bounds.limits = global.limits();
            bounds.jobs = global.jobs;
            return print_run(run_verification(parse_family(family), args, bounds));
        };
    });

    std::string graph_kind = "zdg";
    auto* ex = sub("export", "Write a graph (or a poset's derived graph) as DOT, or JSON with --json");
    ex->add_option("input", path)->required();
    ex->add_option("--graph", graph_kind, "Graph derived from a poset input")->capture_default_str();
    ex->callback([&] {
        action = [&] {
            const auto text = read_file(path);
            SimpleGraph g;
            std::string name;
            if (document_kind(text) == DocumentKind::graph) {
                g = graph_from_json(text);
                name = std::filesystem::path(path).stem().string();
            } else {
                const auto p = poset_from_json(text);
                g = derive_graph(graph_kind, p);
                name = graph_kind + "(" + p.name() + ")";
            }
            emit(global.json ? graph_to_json(g, name) : to_dot(g));
            return static_cast<int>(ok);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }
    try {
        return action();
    } catch (const SizeCapRefusal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return size_cap;
    } catch (const ConstructionRefused& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}
