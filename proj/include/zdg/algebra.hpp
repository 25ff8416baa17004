#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/poset.hpp"

namespace zdg {

// A finite commutative ring known through its ideal lattice: Z_n, or a
// product of local principal ideal rings given by nilpotency indices.
struct RingSpec {
    enum class Kind { zn, artinian_pir, local_chain };

    Kind kind = Kind::zn;
    long n = 0;                // Zn
    std::vector<int> indices;  // ArtinianPIR; LocalChain keeps {length}

    static RingSpec zn(long n);
    static RingSpec artinian_pir(std::vector<int> indices);
    static RingSpec local_chain(int length);

    std::string name() const;
};

struct GroupSpec {
    long order = 0;  // cyclic group of this order

    static GroupSpec cyclic(long n);
};

// (p, a) pairs with n = prod p^a, p ascending.
std::vector<std::pair<long, int>> factorize(long n);

// Nilpotency index of each local factor; a field has index 1.
std::vector<int> local_factor_indices(const RingSpec& r);
int maximal_ideal_count(const RingSpec& r);

// Ordered by inclusion, least element the zero ideal. Z_n ideals are labelled
// "(d)" for the generating divisor d, with "(0)" and "(1)"; product ideals
// are tuples like "(M^2,R)" of per-factor powers of the maximal ideal.
FinitePoset ideal_lattice(const RingSpec& r);

// zdg of the dual lattice: proper ideals I with I + J = R for some proper J.
SimpleGraph comaximal_graph(const RingSpec& r);
// Nonzero proper ideals, I ~ J iff I + J = R.
SimpleGraph comaximal_graph_star(const RingSpec& r);

struct AnnihilatingGraphs {
    SimpleGraph coannihilating;  // CAG*
    SimpleGraph annihilating;    // AG*
};
// CAG* = comaximal_graph_star(r) and AG* = its complement. Throws
// std::logic_error if either differs from the definition-level graph.
AnnihilatingGraphs annihilating_and_coannihilating(const RingSpec& r);

// complement of zdg_star(ideal_lattice(r)).
SimpleGraph intersection_graph(const RingSpec& r);
// Subgroups of the cyclic group, labelled "<d>" for the subgroup generated by d.
SimpleGraph subgroup_intersection_graph(const GroupSpec& g);

// Ideal arithmetic straight from the ring data: gcd/lcm on divisors for Z_n,
// min/max on exponent tuples for products of local PIRs. Shares no code with
// the lattice path.
class IdealArithmetic {
public:
    explicit IdealArithmetic(const RingSpec& r);

    int count() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    int zero() const noexcept { return zero_; }
    int whole() const noexcept { return whole_; }

    int sum(int a, int b) const;
    int intersection(int a, int b) const;
    int annihilator(int a) const;
    bool in_jacobson(int a) const;

private:
    int index_of(const std::vector<int>& exps) const;

    std::vector<int> k_;                  // per-factor nilpotency index
    std::vector<long> primes_;            // Z_n only
    std::vector<std::vector<int>> exps_;  // ideal i is prod M_j^exps_[i][j]
    std::vector<std::string> labels_;
    int zero_ = 0;
    int whole_ = 0;
};

// Definition-level graphs over the nonzero proper ideals (CG: proper ideals
// with a comaximal partner), labelled as in ideal_lattice.
SimpleGraph comaximal_by_definition(const RingSpec& r);
SimpleGraph comaximal_star_by_definition(const RingSpec& r);
SimpleGraph coannihilating_by_definition(const RingSpec& r);  // Ann(I) n Ann(J) = 0
SimpleGraph annihilating_by_definition(const RingSpec& r);    // Ann(I + J) != 0
SimpleGraph intersection_by_definition(const RingSpec& r);    // I n J != 0

// Nonzero proper ideals inside the Jacobson radical; these are the isolated
// vertices that CG* adds to CG.
int jacobson_ideal_count(const RingSpec& r);

// Same labels and same edges between equal labels, vertex order ignored.
bool same_labelled_graph(const SimpleGraph& a, const SimpleGraph& b);

// Parses "30", "pir:2,1" or "chain:3".
RingSpec parse_ring_spec(const std::string& text);

}  // namespace zdg
