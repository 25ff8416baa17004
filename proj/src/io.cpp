#include "zdg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zdg {

namespace {

using nlohmann::json;

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

std::vector<std::string> string_list(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string("missing array \"") + key + "\"");
    std::vector<std::string> out;
    for (const auto& v : doc[key]) {
        if (!v.is_string()) throw InputError(std::string("\"") + key + "\" must hold strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::vector<std::pair<int, int>> pair_list(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string("missing array \"") + key + "\"");
    std::vector<std::pair<int, int>> out;
    for (const auto& v : doc[key]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw InputError(std::string("\"") + key + "\" entries must be [i, j] integer pairs");
        out.emplace_back(v[0].get<int>(), v[1].get<int>());
    }
    return out;
}

std::string name_of(const json& doc, const char* fallback)
{
    if (doc.contains("name") && doc["name"].is_string()) return doc["name"].get<std::string>();
    return fallback;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

FinitePoset poset_from_json(const std::string& text)
{
    const json doc = parse(text);
    if (!doc.is_object()) throw InputError("poset document must be a JSON object");
    return FinitePoset::from_covers(name_of(doc, "P"), string_list(doc, "elements"), pair_list(doc, "covers"));
}

std::string poset_to_json(const FinitePoset& p)
{
    nlohmann::ordered_json doc;
    doc["name"] = p.name();
    doc["elements"] = p.labels();
    nlohmann::ordered_json covers = nlohmann::ordered_json::array();
    for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
    doc["covers"] = covers;
    return doc.dump() + "\n";
}

SimpleGraph graph_from_json(const std::string& text)
{
    const json doc = parse(text);
    if (!doc.is_object()) throw InputError("graph document must be a JSON object");
    const char* key = doc.contains("vertices") ? "vertices" : "elements";
    return SimpleGraph(string_list(doc, key), pair_list(doc, "edges"));
}

std::string graph_to_json(const SimpleGraph& g, const std::string& name)
{
    nlohmann::ordered_json doc;
    doc["name"] = name;
    doc["vertices"] = g.labels();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = edges;
    return doc.dump() + "\n";
}

std::string to_dot(const SimpleGraph& g)
{
    if (g.order() == 0) return "graph G { }\n";
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& l : g.labels()) os << "  " << quoted(l) << ";\n";
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges()) {
        auto a = g.label(u);
        auto b = g.label(v);
        if (b < a) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
    os << "}\n";
    return os.str();
}

DocumentKind document_kind(const std::string& text)
{
    const json doc = parse(text);
    if (doc.is_object() && doc.contains("covers")) return DocumentKind::poset;
    if (doc.is_object() && doc.contains("edges")) return DocumentKind::graph;
    throw InputError("document is neither a poset (\"covers\") nor a graph (\"edges\")");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace zdg
