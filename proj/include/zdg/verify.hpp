#pragma once

#include <string>
#include <vector>

#include "zdg/analysis.hpp"
#include "zdg/report.hpp"

namespace zdg {

enum class Family { chain_products, boolean, zn, pir, corpus_file };

Family parse_family(const std::string& name);
std::string family_name(Family f);

// Check names accepted by run_verification; "all" expands to every check
// that applies to the family.
const std::vector<std::string>& known_checks();

struct VerifyBounds {
    int max_graph_vertices = 12;  // chain products, pir
    int max_factors = 5;          // chain products, pir
    int max_atoms = 5;            // boolean
    long max_n = 200;             // zn
    int max_index = 3;            // pir
    int max_ring_graph_vertices = 40;
    std::string corpus_path;      // corpus-file: a poset document or an array of them
    SearchLimits limits;
    int jobs = 1;
};

struct VerificationFailure {
    std::string instance;
    std::string theorem;
    std::string expected;
    std::string actual;
};

struct VerificationRun {
    Family family = Family::chain_products;
    VerifyBounds bounds;
    std::vector<std::string> checks;
    std::vector<ClassificationReport> results;  // sorted by key
    std::vector<VerificationFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Deterministic for fixed arguments, whatever the job count. Throws
// InputError on unknown checks or an unreadable corpus.
VerificationRun run_verification(Family family, std::vector<std::string> checks, const VerifyBounds& bounds);

// Nondecreasing size tuples, sizes >= 2, in lexicographic order, whose
// zdg has at most max_vertices vertices.
std::vector<std::vector<int>> chain_product_family(int max_factors, int max_vertices);
// |Z(P) \ {0}| for a product of chains with these element counts.
long chain_product_zdg_order(const std::vector<int>& sizes);

}  // namespace zdg
