#pragma once

#include <string>
#include <vector>

#include "galmod/numeric.hpp"

namespace galmod {

// One exhaustive property check over a bounded input range.  checks counts
// individual assertions; counterexample describes the first failure only.
struct SuiteResult {
    std::string name;
    bool pass = true;
    Int checks = 0;
    std::string counterexample;
    double seconds = 0.0;
};

struct SuiteOptions {
    Int size_bound = 12;  // cap on group order for the group-indexed suites
};

// group layer
SuiteResult suite_elem_order_divides_exponent(Int max_order);
SuiteResult suite_power_map_composition(Int max_order);
SuiteResult suite_cyclic_power_quotient(Int max_n, Int max_k);
SuiteResult suite_mult_order_divides_phi(Int max_n);

// pairing layer
SuiteResult suite_pair_sum(Int max_order);
SuiteResult suite_pairing_equivariance(Int max_order);
SuiteResult suite_a_hat_oracle(Int max_order);
SuiteResult suite_theta_transpose_integral(Int max_order);
SuiteResult suite_character_nondegenerate(Int max_order);

// hom layer
SuiteResult suite_hom_equivariance(Int max_order);
SuiteResult suite_rag_theta(Int max_order);
SuiteResult suite_ccc(Int max_order);
SuiteResult suite_swan2b(Int max_order);
SuiteResult suite_swan1a(Int max_n);

// psi layer; action enumeration runs over n in {3, 5, 7, 9}
SuiteResult suite_xi_additive(Int max_order);
SuiteResult suite_inversion_chain(Int max_order);
SuiteResult suite_chain_all(Int max_order);
SuiteResult suite_criteria_a(Int max_order);
SuiteResult suite_criteria_b(Int max_order);

// ideal layer
SuiteResult suite_swan_certificates(Int max_order);
SuiteResult suite_group_ring_axioms(Int max_order);

// quadratic layer
SuiteResult suite_qr_laws(Int max_p);
SuiteResult suite_vp_invariant(Int max_p);
SuiteResult suite_search_witness(Int bound);
SuiteResult suite_remark(Int max_p);
SuiteResult suite_unit_minimality(Int max_d);
SuiteResult suite_chevalley_lem3(Int max_p);

// Every suite, with the group-indexed bounds scaled to size_bound (hard
// caps keep the heavy suites desk-sized).  suite_chain_all fails once
// size_bound reaches 8: the subgroup chain it tests is not a formal
// consequence of the module axioms, and the report carries a concrete
// counterexample action.  suite_inversion_chain is the restriction under
// which the chain is a theorem, and stays green.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace galmod
