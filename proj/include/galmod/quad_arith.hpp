#pragma once

#include <string>
#include <vector>

#include "galmod/numeric.hpp"

namespace galmod {

// Ring of integers Z[w] of Q(sqrt(D)) for squarefree D.
// w = (1+sqrt(D))/2 when D = 1 mod 4, else w = sqrt(D).
// Minimal polynomial of w is x^2 - omega_trace*x + omega_norm,
// whose discriminant equals disc.
struct QuadField {
    Int d = 0;
    Int disc = 0;
    bool half_basis = false;
    Int omega_trace = 0;
    Int omega_norm = 0;

    explicit QuadField(Int d_in);

    // Conductor of the attached quadratic character.
    Int conductor() const { return disc < 0 ? -disc : disc; }
};

// a + b*w with integer coordinates.
struct QuadInt {
    Int a = 0;
    Int b = 0;
};

Int quad_norm(const QuadField& k, const QuadInt& u);
std::string quad_str(const QuadField& k, const QuadInt& u);

enum class SplittingType { split, inert, ramified };
const char* splitting_name(SplittingType t);

// Legendre symbol by the Euler criterion; p must be an odd prime.
Int legendre(Int a, Int p);

// p = -1 mod 8, cross-checked against (-1/p) = -1 and (2/p) = 1.
bool p_mod8_criterion(Int p);

// ramified iff p | disc, otherwise split iff (disc/p) = 1.  p = 2 rejected.
SplittingType splitting_type(const QuadField& k, Int p);

struct FundamentalUnit {
    QuadInt u;
    Int norm = 0;
};

// Smallest unit > 1 of the ring of integers, from the continued fraction
// expansion of w.  Requires d > 0.
FundamentalUnit fundamental_unit(const QuadField& k);

// Structure of (O_K/p)^x and of its quotient V_p by the image of the
// global units.  Invariant factor lists are ascending divisibility
// chains with the trivial factors dropped.
struct VpResult {
    Int p = 0;
    SplittingType splitting = SplittingType::split;
    std::vector<Int> full_factors;
    Int full_order = 0;
    Int unit_image_order = 0;
    std::vector<Int> vp_factors;
    Int vp_order = 0;
    bool has_order_four = false;
};

VpResult vp_structure(const QuadField& k, Int p);

// For real K whose fundamental unit has norm -1 and inert p = 3 mod 4:
// eps^(p+1) = -1 mod p, both 2(p+1)/n_p(eps) and (p^2-1)/n_p(eps) odd.
struct RemarkReport {
    Int p = 0;
    bool eps_power_is_minus_one = false;
    Int n_p = 0;
    Rat first_quotient;
    bool first_quotient_odd_integer = false;
    Int vp_order = 0;
    bool vp_order_odd = false;
    bool pass = false;
};

RemarkReport remark_check(const QuadField& k, Int p);

struct ChevalleyInput {
    Int h_k = 1;
    Int r = 0;
    std::vector<Int> e_list;
    Int norm_index = 1;
    Int degree = 1;
};

struct ChevalleyResult {
    Rat value;
    bool integral = false;
};

// h * 2^r * prod(e) / (norm_index * degree), exactly.
ChevalleyResult chevalley(const ChevalleyInput& in);

// 2^r1 * (p-1)^r2 / n0 with an evenness flag.  The evenness claim only
// holds under r1 >= 1 and (r2 >= 1, or r1 >= 2 with n0 = 2); hypotheses_ok
// reports that.  r2 = 0 forces n0 = 2 for the fields this models.
struct Lem3Bound {
    Rat value;
    bool is_even = false;
    bool hypotheses_ok = false;
};

Lem3Bound lem3_bound(Int r1, Int r2, Int n0, Int p);

// Candidate cyclic groups {C_((p+1)/2), C_(p+1)} or {C_((p-1)/2), C_(p-1)}
// depending on the sign of (d/p).  The ambiguity is reported, not resolved.
struct KobayashiCandidates {
    Int symbol = 0;
    std::vector<Int> cyclic_orders;
};

KobayashiCandidates kobayashi_swan(Int d, Int p);

// Primes p <= bound with p = -1 mod 8 and p = -1 mod 2m, ascending.
std::vector<Int> explicit_prime_search(Int m, Int bound);

struct SearchWitness {
    Int p = 0;
    bool has_order_four = false;
};

// Same search with m the conductor of the given imaginary field, each
// prime checked for an order-four element in V_p.
std::vector<SearchWitness> explicit_prime_search_witnessed(const QuadField& k, Int bound);

// For d < 0, d != -1 and p from the search for conductor(Q(sqrt(d))):
// every prime divisor q of |d| has (q/p) = 1, and (d/p) = -1 follows.
bool example_deduction(Int d, Int p);

}  // namespace galmod
