#pragma once

#include "galmod/groups.hpp"
#include "galmod/lattice.hpp"

namespace galmod {

/**
 * Element of the rational group algebra QG, one coefficient per group
 * element in canonical order.  Integer elements simply have denominator 1
 * throughout.
 */
struct GroupRingElement {
    FinAbGroup group;
    std::vector<Rat> coeffs;

    static GroupRingElement zero(const FinAbGroup& g);
    static GroupRingElement scalar(const FinAbGroup& g, const Rat& c);
    static GroupRingElement basis(const FinAbGroup& g, const GroupElement& s);
    // Sum of the elements of a subgroup.
    static GroupRingElement subgroup_sum(const FinAbGroup& g, const Subgroup& h);

    GroupRingElement add(const GroupRingElement& o) const;
    GroupRingElement sub(const GroupRingElement& o) const;
    GroupRingElement scale(const Rat& c) const;
    bool is_integral() const;
    std::vector<Int> integer_coeffs() const;  // throws when not integral
};

// Convolution product in QG.
GroupRingElement group_ring_mul(const GroupRingElement& x, const GroupRingElement& y);

/**
 * The two-generator ideal (r, Sigma_H) of ZG as a full-rank lattice, with
 * its index in ZG.  Requires gcd(r, |H|) = 1.
 */
struct SwanIdeal {
    FinAbGroup group;
    Subgroup subgroup;
    Int r = 1;
    IntLattice lattice;
    Int index = 1;
};

SwanIdeal swan_ideal(const FinAbGroup& g, const Subgroup& h, Int r);

// r + (1-r) * |H|^{-1} * Sigma_H with coefficients mod p^N; needs p | r and
// p coprime to |H|.
std::vector<Int> local_generator(const FinAbGroup& g, const Subgroup& h, Int r,
                                 Int p, Int n_precision);

struct LocalPrimeCheck {
    Int p = 0;
    Int n_precision = 0;
    bool matches = false;
};

struct LocalFreenessCert {
    Int index = 1;
    bool identities_pass = false;       // the two exact algebra identities
    bool index_primes_divide_r = false;
    std::vector<LocalPrimeCheck> per_prime;
    bool pass = false;
};

// Certificate that (r, Sigma_H) is locally principal: at every prime
// dividing the index the ideal agrees with the cyclic module generated by
// the local generator, compared mod p^N with p^N past the index.
LocalFreenessCert verify_locally_free(const FinAbGroup& g, const Subgroup& h, Int r);

struct FiberModule {
    FinAbGroup group;
    Subgroup subgroup;
    Int r = 1;
    std::vector<Int> coset_reps;        // element indices, lex-least per coset
    std::vector<Int> quot_basis;        // non-rep element indices (Sigma-quotient basis)
    IntLattice pair_lattice;            // inside Z^{|Q|} x Z^{|G|-|Q|}
    IntMat phi_images;                  // image of each basis vector in ZG
};

struct FiberCert {
    bool integral = false;
    bool image_matches_ideal = false;
    bool kernel_trivial = false;
    bool witnesses_pass = false;
    bool pass = false;
};

// The pullback of ZQ and the Sigma-quotient along reduction mod |H|,
// twisted by the unit r, together with the evaluation map into ZG.
FiberModule fiber_module(const FinAbGroup& g, const Subgroup& h, Int r);

FiberCert verify_fiber_module(const FiberModule& fm);

// The indicator exponents of c_swan are fixed by every chi -> chi^k with
// gcd(k, |G|) = 1; exhaustive over k.
bool psi_invariance_check(const FinAbGroup& g, const Subgroup& h, Int r);

}  // namespace galmod
