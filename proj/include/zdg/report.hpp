#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdg/algebra.hpp"
#include "zdg/analysis.hpp"
#include "zdg/graph.hpp"
#include "zdg/poset.hpp"

namespace zdg {

struct ReportOptions {
    bool chordal = true;
    bool perfect = true;
    bool clique = true;
    bool chi = true;
    bool chi_prime = false;
    bool chi_double_prime = false;
    SearchLimits limits;
};

struct ClassificationReport {
    std::string instance;
    std::string key;  // sort key
    std::optional<int> atoms;
    std::optional<bool> chordal;
    std::optional<bool> perfect;
    std::optional<int> clique;
    std::optional<int> chi;
    std::optional<int> chi_prime;
    // chi'' is known exactly when lower == upper.
    std::optional<int> chi2_lower;
    std::optional<int> chi2_upper;
    int max_degree = 0;
    std::optional<EdgeClass> edge_class;
    std::optional<TotalType> type;
    // Predicted-versus-computed checks, keyed by check name.
    std::map<std::string, bool> agreement;

    bool chi2_exact() const { return chi2_lower && chi2_upper && *chi2_lower == *chi2_upper; }
    bool agrees() const;
};

ClassificationReport classify_graph(const SimpleGraph& g, const ReportOptions& opts, std::string instance,
                                    std::string key);

// Chordality and perfectness of G(P), G^c(P) predicted from the atom class
// sizes of a poset whose quotient is Boolean.
struct ZdgPrediction {
    bool chordal = false;
    bool complement_chordal = false;
    bool perfect = false;
};
ZdgPrediction predict_zdg(const std::vector<int>& atom_class_sizes);
// Atom class sizes, or nullopt when the quotient is not Boolean.
std::optional<std::vector<int>> boolean_atom_class_sizes(const FinitePoset& p);

// Report on zdg(p); adds theorem checks when the quotient is Boolean.
ClassificationReport classify_poset(const FinitePoset& p, const ReportOptions& opts, std::string key = {});

// The same predictions for CG*(R), read off the local factors.
struct RingPrediction {
    bool chordal = false;             // CG*
    bool complement_chordal = false;  // complement of CG*
    bool perfect = false;
    TotalType type = TotalType::one;  // of CG
};
RingPrediction predict_ring(const RingSpec& r);

// Report on CG*(R) with the ring predictions checked against generic
// recognition, for CG* and for the complement of IG (local PIR factors).
ClassificationReport classify_family(const RingSpec& r, const ReportOptions& opts = {}, std::string key = {});

std::string csv_header();
std::string to_csv(const ClassificationReport& r);
std::string to_json(const ClassificationReport& r);

}  // namespace zdg
