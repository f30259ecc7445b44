#pragma once

#include <set>

#include "galmod/groups.hpp"
#include "galmod/lattice.hpp"

namespace galmod {

/**
 * Character of a finite abelian group G, stored as exponents at the
 * generators: chi(g_i) = zeta_e^{v_i} with e = exp(G).  Well-formedness
 * requires d_i * v_i = 0 mod e, i.e. v_i is a multiple of e/d_i.
 */
struct Character {
    FinAbGroup group;
    std::vector<Int> values_exponent;

    // Exponent a with chi(s) = zeta_e^a, 0 <= a < e.
    Int eval_exponent(const GroupElement& s) const;

    Int order() const;
    bool is_trivial() const;
    bool kills(const GroupElement& s) const { return eval_exponent(s) == 0; }
    // chi(H) = 1, i.e. chi kills every generator of the subgroup.
    bool kills_subgroup(const std::vector<GroupElement>& gens) const;

    Character pow(Int k) const;
    Character inverse() const { return pow(-1); }
    Character mul(const Character& other) const;
};

// All |G| characters, in lexicographic order of their exponent vectors.
// The trivial character comes first.
std::vector<Character> character_group(const FinAbGroup& g);

// Position of chi in the canonical character order.
Int character_index(const Character& chi);

/**
 * Galois action data: a subgroup D of (Z/modulus)^x, listed in full.
 * D acts on characters by chi -> chi^d and on group elements by s -> d*s;
 * that is only determined for characters/elements of order dividing the
 * modulus, which is all of them when modulus = exp(G).
 */
struct GaloisModel {
    Int modulus = 1;
    std::set<Int> residues;  // the full subgroup D, always containing 1

    GaloisModel() { residues.insert(1 % 1); }
    GaloisModel(Int modulus, const std::vector<Int>& generators);

    static GaloisModel trivial(Int modulus);
    static GaloisModel full(Int modulus);

    Int size() const { return static_cast<Int>(residues.size()); }
    bool contains(Int d) const { return residues.count(mod_reduce(d, modulus)) > 0; }
};

// Rational coefficient vector indexed by the elements of a group (or, for
// functionals, by its characters in canonical order).
struct RationalGroupVector {
    FinAbGroup group;
    std::vector<Rat> coeffs;
};

// <chi, s> = a/|s| where chi(s) = zeta_{|s|}^a, 0 <= a < |s|.
Rat pairing(const Character& chi, const GroupElement& s);

// Theta(psi) = sum_s <psi, s> s, the Q-linear extension of the pairing in
// the first argument; psi is a coefficient vector over the characters.
RationalGroupVector theta(const FinAbGroup& g, const std::vector<Int>& psi);

// The full-rank lattice of character vectors psi with Theta(psi) integral.
IntLattice a_hat_lattice(const FinAbGroup& g);

// Integer exponent of prod_s g_hom(s)^{<psi,s>} for psi in the integrality
// lattice; exponents holds one integer per group element.
Int theta_transpose_exponent(const FinAbGroup& g, const std::vector<Int>& exponents,
                             const std::vector<Int>& psi);

// Constancy of an exponent vector on D-orbits.  domain_on_characters picks
// which side the indices live on.  Orbits are only formed for characters or
// elements whose order divides the model modulus; other indices are not
// constrained by the model.
bool is_equivariant(const FinAbGroup& g, const std::vector<Int>& exponents,
                    bool domain_on_characters, const GaloisModel& model);

// |D| halved when -1 lies in D (and the modulus admits -1 != 1).
Int d_n_of_model(const GaloisModel& model);

}  // namespace galmod
