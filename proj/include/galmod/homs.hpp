#pragma once

#include <string>

#include "galmod/stickelberger.hpp"

namespace galmod {

enum class DomainKind { characters, group_elements };

/**
 * Homomorphism into a multiplicatively written target, determined by one
 * symbolic base and an integer exponent per domain index: the hom sends
 * index i to base^exponents[i].  Characters are indexed in canonical
 * (lexicographic) order, group elements likewise.
 */
struct MonomialHom {
    FinAbGroup group;
    DomainKind domain_kind = DomainKind::characters;
    std::string base_tag = "r";
    std::vector<Int> exponents;
};

struct RamificationDatum {
    std::string place_label;
    GroupElement s_v;
};

// Exponent 1 exactly at the characters not killing H.
MonomialHom c_swan(const FinAbGroup& g, const Subgroup& h, const std::string& base_tag);

// Variant 1: exponent <chi,t> + <chi,t^-1>.  Variant 2: 2<chi,t> - <chi,t^2>.
// Both are integral for every t != identity.
MonomialHom c_family(const FinAbGroup& g, const GroupElement& t, int variant,
                     const std::string& base_tag);

// Group-element side partner of c_family.  Variant 1: exponent 2 at t when
// |t| = 2, else 1 at t and t^-1.  Variant 2 (|t| odd): 2 at t, -1 at t^2.
MonomialHom g_family(const FinAbGroup& g, const GroupElement& t, int variant,
                     const std::string& base_tag);

// Restriction-to-lattice identity: for every basis vector psi of the
// integrality lattice, sum_chi exp_c(chi) psi_chi equals the transpose
// exponent of g_hom at psi.
bool verify_rag_equals_theta_t(const MonomialHom& c, const MonomialHom& g_hom);

// Exponent 1 on {d*t, -d*t : d in D} for H = <t>, 0 elsewhere.
MonomialHom swan1a_g(const FinAbGroup& g, const GroupElement& t,
                     const GaloisModel& model, const std::string& base_tag);

// Checks both halves of the cyclic-subgroup descent computation: the
// character sum over D collapses to |D| * [chi(t) != 1], and the transpose
// of swan1a_g matches c_swan raised to the |D|-or-half-|D| multiplier.
bool verify_swan1a(const FinAbGroup& g, const GroupElement& t, const GaloisModel& model);

// For |t| odd: exp_{c2}(chi) + exp_{c2}(chi^-1) = [chi(t) != 1] with
// c2 = c_family(t, 2).
bool verify_ccc(const FinAbGroup& g, const GroupElement& t);

// 2 when |G| is a power of two, else 1.
Int delta_of_group(const FinAbGroup& g);

// exp_c(chi) + exp_c(chi^-1) for the delta-matched family; equals
// delta_of_group(g) whenever chi(t) != 1.
Int verify_swan2b_exponent(const FinAbGroup& g, const GroupElement& t, const Character& chi);

// One hom per ramified place: exponent <chi,s_v> + <chi,s_v^-1>, checked
// against the indicator hom of <s_v>.
std::vector<MonomialHom> resolvent_exponents(const FinAbGroup& g,
                                             const std::vector<RamificationDatum>& data);

}  // namespace galmod
