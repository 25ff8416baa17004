#pragma once

#include <string>

#include "zdg/graph.hpp"
#include "zdg/poset.hpp"

namespace zdg {

// {"name": ..., "elements": [...], "covers": [[lo, hi], ...]}
FinitePoset poset_from_json(const std::string& text);
std::string poset_to_json(const FinitePoset& p);

// {"name": ..., "vertices": [...], "edges": [[i, j], ...]}; "elements" is
// accepted in place of "vertices" on input.
SimpleGraph graph_from_json(const std::string& text);
std::string graph_to_json(const SimpleGraph& g, const std::string& name = "G");

// graph G { "a" -- "b"; "c"; }
std::string to_dot(const SimpleGraph& g);

enum class DocumentKind { poset, graph };
// Throws InputError with a line/column diagnostic on malformed JSON.
DocumentKind document_kind(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace zdg
