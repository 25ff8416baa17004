#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace zdg {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// A set of element indices into one poset (or vertex indices into one graph).
using ElementSet = Bits;

inline constexpr std::size_t max_poset_size = 4096;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ElementSet make_set(std::size_t universe, std::initializer_list<int> members);
ElementSet make_set(std::size_t universe, const std::vector<int>& members);
std::vector<int> members(const ElementSet& s);

class FinitePoset {
public:
    using Cover = std::pair<int, int>;

    // Builds the reflexive-transitive closure of the cover relation.
    // Throws InputError on duplicate labels, bad indices, self covers,
    // cycles, a missing least element or more than max_poset_size elements.
    static FinitePoset from_covers(std::string name, std::vector<std::string> labels,
                                   const std::vector<Cover>& covers);

    // up[i] must hold every j with i <= j. Checked for being a partial order
    // with a least element.
    static FinitePoset from_relation(std::string name, std::vector<std::string> labels,
                                     std::vector<Bits> up);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(const std::string& label) const;

    bool le(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    const Bits& up(int a) const { return up_[static_cast<std::size_t>(a)]; }
    const Bits& down(int a) const { return down_[static_cast<std::size_t>(a)]; }

    int zero() const noexcept { return zero_; }
    std::optional<int> one() const noexcept { return one_; }

    // {a,b}^l = {0}
    bool disjoint(int a, int b) const;

    // Hasse diagram, sorted.
    std::vector<Cover> covers() const;

    ElementSet empty_set() const { return ElementSet(size()); }

    // Full check of reflexivity, antisymmetry and transitivity of le.
    bool is_partial_order() const;

    FinitePoset renamed(std::string name) const;

private:
    friend FinitePoset direct_product(const std::vector<FinitePoset>& ps);

    FinitePoset() = default;
    void finish();

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::vector<Bits> down_nz_;  // down_ without the least element
    int zero_ = 0;
    std::optional<int> one_;
};

ElementSet upper_cone(const FinitePoset& p, const ElementSet& a);
ElementSet lower_cone(const FinitePoset& p, const ElementSet& a);
ElementSet annihilator(const FinitePoset& p, const ElementSet& a);
ElementSet atoms(const FinitePoset& p);
ElementSet zero_divisors(const FinitePoset& p);
ElementSet dense_elements(const FinitePoset& p);

bool is_zero_distributive(const FinitePoset& p);
std::optional<int> pseudocomplement(const FinitePoset& p, int a);
bool is_ssc(const FinitePoset& p);

enum class BooleanCheck { boolean, not_boolean, not_a_lattice };
BooleanCheck is_boolean(const FinitePoset& p);
bool is_lattice(const FinitePoset& p);

FinitePoset dual(const FinitePoset& p);
FinitePoset direct_product(const std::vector<FinitePoset>& ps);

FinitePoset make_chain(int n);
FinitePoset make_boolean(int n);
// Product of chains with the given element counts.
FinitePoset make_chain_product(const std::vector<int>& sizes);
// Divisors of n ordered by divisibility.
FinitePoset make_divisor_lattice(long n);
// 0, atoms q1..qn, elements qi* above every atom except qi, and a top.
FinitePoset make_atom_coatom_poset(int n);
// Three atoms. Atom i sits at the bottom of a chain of l[i] elements; the
// chain of m[k] elements labelled qk* sits above the tops of the two atom
// chains other than k; a top covers the three qk* chain tops.
FinitePoset make_three_atom_chain_poset(const std::vector<int>& l, const std::vector<int>& m);

}  // namespace zdg
