#include "zdg/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "zdg/quotient.hpp"
#include "zdg/zdg.hpp"

namespace zdg {

namespace {

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

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_str(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

std::string chi2_str(const ClassificationReport& r)
{
    if (!r.chi2_lower || !r.chi2_upper) return "";
    if (r.chi2_exact()) return std::to_string(*r.chi2_upper);
    return std::to_string(*r.chi2_lower) + ".." + std::to_string(*r.chi2_upper);
}

std::string class_str(const std::optional<EdgeClass>& c)
{
    if (!c) return "";
    return *c == EdgeClass::one ? "one" : "two";
}

std::string type_str(const std::optional<TotalType>& t)
{
    if (!t) return "";
    return *t == TotalType::one ? "I" : "II";
}

}  // namespace

bool ClassificationReport::agrees() const
{
    return std::all_of(agreement.begin(), agreement.end(), [](const auto& kv) { return kv.second; });
}

ClassificationReport classify_graph(const SimpleGraph& g, const ReportOptions& opts, std::string instance,
                                    std::string key)
{
    ClassificationReport r;
    r.instance = std::move(instance);
    r.key = key.empty() ? r.instance : std::move(key);
    r.max_degree = g.max_degree();
    if (opts.chordal) r.chordal = is_chordal(g);
    if (opts.perfect) r.perfect = is_perfect(g);
    if (opts.clique) r.clique = clique_number(g);
    if (opts.chi) r.chi = chromatic_number(g);
    if (opts.chi_prime) {
        r.chi_prime = edge_chromatic_number(g);
        r.edge_class = *r.chi_prime == r.max_degree ? EdgeClass::one : EdgeClass::two;
    }
    if (opts.chi_double_prime) {
        const auto t = total_coloring(g, opts.limits);
        r.chi2_lower = t.lower;
        r.chi2_upper = t.upper;
        if (t.exact && g.order() > 0) {
            r.agreement["tcc"] = t.upper == r.max_degree + 1 || t.upper == r.max_degree + 2;
            if (t.upper == r.max_degree + 1) r.type = TotalType::one;
            if (t.upper == r.max_degree + 2) r.type = TotalType::two;
        }
    }
    return r;
}

ZdgPrediction predict_zdg(const std::vector<int>& sizes)
{
    const auto n = sizes.size();
    const auto singletons = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 1));
    ZdgPrediction p;
    p.chordal = n == 1 || (n == 2 && singletons >= 1) || (n == 3 && singletons == 3);
    p.complement_chordal = n <= 3;
    p.perfect = n <= 4;
    return p;
}

std::optional<std::vector<int>> boolean_atom_class_sizes(const FinitePoset& p)
{
    const auto q = quotient(p);
    if (!quotient_is_boolean(q)) return std::nullopt;
    std::vector<int> sizes;
    for (int k = 0; k < q.atom_count(); ++k) sizes.push_back(static_cast<int>(q.cls(q.atom_class(k)).members.size()));
    return sizes;
}

ClassificationReport classify_poset(const FinitePoset& p, const ReportOptions& opts, std::string key)
{
    const auto g = zdg(p);
    auto r = classify_graph(g, opts, p.name(), std::move(key));
    const int n = static_cast<int>(atoms(p).count());
    r.atoms = n;
    const auto sizes = boolean_atom_class_sizes(p);
    if (!sizes) return r;
    const auto pred = predict_zdg(*sizes);
    if (r.chordal) {
        r.agreement["chordal-theorem"] = pred.chordal == *r.chordal;
        r.agreement["complement-chordal-theorem"] = pred.complement_chordal == is_chordal(complement(g));
    }
    if (r.perfect) r.agreement["perfect-theorem"] = pred.perfect == *r.perfect;
    if (r.chi && r.clique && n >= 2) r.agreement["chi-equals-atoms"] = *r.chi == n && *r.clique == n;
    return r;
}

RingPrediction predict_ring(const RingSpec& r)
{
    const auto ks = local_factor_indices(r);
    const auto n = ks.size();
    const auto fields = static_cast<std::size_t>(std::count(ks.begin(), ks.end(), 1));
    RingPrediction p;
    p.chordal = n == 1 || (n == 2 && fields >= 1) || (n == 3 && fields == 3);
    p.complement_chordal = n <= 3;
    p.perfect = n <= 4;
    p.type = n == 2 && ks[0] == ks[1] ? TotalType::two : TotalType::one;
    return p;
}

ClassificationReport classify_family(const RingSpec& ring, const ReportOptions& opts, std::string key)
{
    const auto g = comaximal_graph_star(ring);
    auto r = classify_graph(g, opts, ring.name(), std::move(key));
    r.atoms = maximal_ideal_count(ring);
    const auto pred = predict_ring(ring);
    const auto ig_c = complement(intersection_graph(ring));
    if (r.chordal) {
        r.agreement["ring-chordal"] = pred.chordal == *r.chordal;
        r.agreement["ring-complement-chordal"] = pred.complement_chordal == is_chordal(complement(g));
        r.agreement["ig-chordal"] = pred.chordal == is_chordal(ig_c);
        r.agreement["ig-complement-chordal"] = pred.complement_chordal == is_chordal(complement(ig_c));
    }
    if (r.perfect) {
        r.agreement["ring-perfect"] = pred.perfect == *r.perfect;
        r.agreement["ig-perfect"] = pred.perfect == is_perfect(ig_c);
    }
    if (r.edge_class) r.agreement["ring-class-one"] = *r.edge_class == EdgeClass::one;
    if (r.type) r.agreement["ring-type"] = *r.type == pred.type;
    return r;
}

std::string csv_header() { return "instance,key,atoms,chordal,perfect,clique,chi,chiPrime,chiDoublePrime,delta,class,type"; }

std::string to_csv(const ClassificationReport& r)
{
    const std::vector<std::string> fields{csv_field(r.instance), csv_field(r.key), opt_str(r.atoms),
                                          opt_str(r.chordal),    opt_str(r.perfect), opt_str(r.clique),
                                          opt_str(r.chi),        opt_str(r.chi_prime), chi2_str(r),
                                          std::to_string(r.max_degree), class_str(r.edge_class), type_str(r.type)};
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
    return out;
}

std::string to_json(const ClassificationReport& r)
{
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["key"] = r.key;
    auto put = [&](const char* name, const auto& v) {
        if (v) j[name] = *v;
        else j[name] = nullptr;
    };
    put("atoms", r.atoms);
    put("chordal", r.chordal);
    put("perfect", r.perfect);
    put("clique", r.clique);
    put("chi", r.chi);
    put("chiPrime", r.chi_prime);
    if (r.chi2_lower && r.chi2_upper) {
        j["chiDoublePrime"] = {{"lower", *r.chi2_lower}, {"upper", *r.chi2_upper}, {"exact", r.chi2_exact()}};
    } else {
        j["chiDoublePrime"] = nullptr;
    }
    j["delta"] = r.max_degree;
    j["class"] = r.edge_class ? nlohmann::ordered_json(class_str(r.edge_class)) : nlohmann::ordered_json(nullptr);
    j["type"] = r.type ? nlohmann::ordered_json(type_str(r.type)) : nlohmann::ordered_json(nullptr);
    j["agreement"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.agreement) j["agreement"][k] = v;
    return j.dump();
}

}  // namespace zdg
