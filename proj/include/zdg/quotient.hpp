#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/poset.hpp"

namespace zdg {

// Bitset over atom positions (atom k is the k-th atom in ascending index order).
using Support = Bits;

struct QuotientClass {
    Support support;
    std::vector<int> members;  // ascending base indices
};

class QuotientPoset {
public:
    explicit QuotientPoset(FinitePoset base);

    const FinitePoset& base() const noexcept { return base_; }
    // Base indices of the atoms; position k carries support bit k.
    const std::vector<int>& atom_indices() const noexcept { return atoms_; }
    int atom_count() const noexcept { return static_cast<int>(atoms_.size()); }

    // Class 0 is the zero class; the rest follow support cardinality, then
    // lexicographic order of the ascending atom positions.
    const std::vector<QuotientClass>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    const QuotientClass& cls(int c) const { return classes_.at(static_cast<std::size_t>(c)); }
    int class_of(int element) const { return class_of_.at(static_cast<std::size_t>(element)); }
    const Support& support_of_element(int element) const
    {
        return element_support_.at(static_cast<std::size_t>(element));
    }

    std::optional<int> find_class(const Support& s) const;
    // Class with support {k}.
    int atom_class(int k) const;
    // Class with full support, if any element is dense.
    std::optional<int> dense_class() const;
    bool is_zero_class(int c) const { return c == 0; }

    // "P_0", "P_13", "P_{1,12}" (commas once any atom position exceeds 9).
    std::string label(int c) const;

private:
    FinitePoset base_;
    std::vector<int> atoms_;
    std::vector<Support> element_support_;
    std::vector<QuotientClass> classes_;
    std::vector<int> class_of_;
};

QuotientPoset quotient(const FinitePoset& p);

std::string support_label(const Support& s);

bool class_order_le(const QuotientPoset& q, int c1, int c2);
// Reverse inclusion of annihilators of representatives; kept as a
// definition-level cross-check of class_order_le.
bool class_order_le_by_annihilator(const QuotientPoset& q, int c1, int c2);
bool classes_adjacent(const QuotientPoset& q, int c1, int c2);
// Class with support equal to the complement of the atom class's support.
// Throws InputError if the base is not 0-distributive, the argument is not an
// atom class, or the target class is empty.
int class_pseudocomplement(const QuotientPoset& q, int atom_class);
bool quotient_is_boolean(const QuotientPoset& q);

// The classes as a poset under class_order_le, labelled by class labels.
FinitePoset quotient_as_poset(const QuotientPoset& q);

}  // namespace zdg
