#pragma once

#include <vector>

#include "galmod/numeric.hpp"

namespace galmod {

// Element of a finite abelian group, written additively: one coordinate
// per invariant factor, reduced modulo that factor.
using GroupElement = std::vector<Int>;

/**
 * Finite abelian group in invariant-factor form: factors d_1 | d_2 | ... | d_k
 * with every d_i >= 2.  An empty factor list is the trivial group.  Elements
 * are enumerated in lexicographic order of their coordinate vectors, so the
 * identity always has index 0.
 */
struct FinAbGroup {
    std::vector<Int> factors;

    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<Int> invariant_factors);

    // Canonicalizes an arbitrary list of moduli (entries >= 1) into
    // invariant factors, e.g. {2,3} -> {6}.
    static FinAbGroup from_moduli(const std::vector<Int>& moduli);

    int num_gens() const { return static_cast<int>(factors.size()); }
    Int order() const;
    Int exponent() const { return factors.empty() ? 1 : factors.back(); }

    GroupElement identity() const { return GroupElement(factors.size(), 0); }
    GroupElement reduce(GroupElement e) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(Int k, const GroupElement& a) const;

    Int index_of(const GroupElement& e) const;
    GroupElement element_at(Int idx) const;
    std::vector<GroupElement> elements() const;  // throws resource_error past kEnumBound

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.factors == b.factors;
    }
};

struct CyclicSubgroup {
    GroupElement generator;  // lexicographically least generator
    Int order = 1;
};

// Arbitrary subgroup, stored as the sorted list of member element indices
// together with a generating set.
struct Subgroup {
    std::vector<Int> element_indices;
    std::vector<GroupElement> generators;

    Int order() const { return static_cast<Int>(element_indices.size()); }
};

struct PowerMap {
    Int k = 1;
    std::vector<Int> images;  // index -> index of k*element
    bool is_automorphism = false;
};

struct QuotientByCyclic {
    std::vector<Int> factors;        // invariant factors of C_n^k / <x>
    bool surjects_onto_rank_k_minus_1 = false;
};

// Order of s in G: least m >= 1 with m*s = 0.
Int elem_order(const FinAbGroup& g, const GroupElement& s);

// Multiplication-by-k table on all of G; automorphism iff gcd(k, |G|) = 1.
PowerMap power_map(const FinAbGroup& g, Int k);

// Least m >= 1 with k^m = 1 mod n; requires gcd(k, n) = 1.
Int mult_order(Int k, Int n);

// All cyclic subgroups, deduplicated, each with its canonical generator.
std::vector<CyclicSubgroup> cyclic_subgroups(const FinAbGroup& g);

// All subgroups of G (closure enumeration; intended for small G).
std::vector<Subgroup> all_subgroups(const FinAbGroup& g);

Subgroup subgroup_generated_by(const FinAbGroup& g,
                               const std::vector<GroupElement>& gens);

// Invariant factors of C_n^k / <x>, with the flag that at least k-1 of
// them are divisible by n (so the quotient surjects onto C_n^{k-1}).
QuotientByCyclic quotient_by_cyclic(Int n, Int k, const GroupElement& x);

// Invariant-factor lists of all abelian groups of order 1..max_order.
std::vector<FinAbGroup> all_abelian_groups(Int max_order);

}  // namespace galmod
