#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "galmod/psi_model.hpp"

using namespace galmod;

namespace {

// Matrix action oracle following the module convention.
GroupElement mat_apply(const FinAbGroup& g, const IntMat& m, const GroupElement& x) {
    GroupElement out(g.factors.size(), 0);
    for (size_t i = 0; i < g.factors.size(); ++i) {
        Int acc = 0;
        for (size_t j = 0; j < g.factors.size(); ++j) acc += m[i][j] * x[j];
        out[i] = mod_reduce(acc, g.factors[i]);
    }
    return out;
}

PsiModule mul3_on_c8() {
    return make_psi_module(FinAbGroup({8}), 5, {{2, {{3}}}});
}

PsiModule natural_on_c5() {
    return make_psi_module(FinAbGroup({5}), 5, {{2, {{2}}}});
}

std::set<Int> index_set(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("make_psi_module closes generators into a total validated action") {
    PsiModule m = mul3_on_c8();
    CHECK(m.n == 5);
    // residues 1,2,3,4 all present
    CHECK(m.action.size() == 4);
    CHECK(m.action.at(1) == IntMat{{1}});
    CHECK(m.action.at(2) == IntMat{{3}});
    CHECK(m.action.at(4) == IntMat{{1}});  // 3^2 = 9 = 1 mod 8
    CHECK(m.action.at(3) == IntMat{{3}});  // 3 = 2^3 mod 5, image 27 = 3 mod 8
    // non-bijective image is rejected
    CHECK_THROWS_AS(make_psi_module(FinAbGroup({8}), 5, {{2, {{2}}}}),
                    std::invalid_argument);
    // order-inconsistent assignment is rejected: 4 has order 2 mod 5 but
    // doubling on C_5 has order 4
    CHECK_THROWS_AS(make_psi_module(FinAbGroup({5}), 5, {{4, {{2}}}}),
                    std::invalid_argument);
    // generators must span the unit group
    CHECK_THROWS_AS(make_psi_module(FinAbGroup({8}), 5, {{4, {{1}}}}),
                    std::invalid_argument);
}

TEST_CASE("apply is multiplicative in the residue and rejects non-units") {
    for (const PsiModule& m : {mul3_on_c8(), natural_on_c5()}) {
        for (const auto& x : m.a.elements()) {
            CHECK(m.apply(1, x) == x);
            CHECK(m.apply(m.n + 2, x) == m.apply(2, x));
            for (Int k1 = 1; k1 < m.n; ++k1)
                for (Int k2 = 1; k2 < m.n; ++k2) {
                    if (gcd_int(k1, m.n) != 1 || gcd_int(k2, m.n) != 1) continue;
                    CHECK(m.apply(k1, m.apply(k2, x)) == m.apply(k1 * k2, x));
                }
        }
        CHECK_THROWS_AS(m.apply(5, m.a.identity()), std::domain_error);
    }
}

TEST_CASE("xi and xi_prime follow their defining formulas") {
    for (const PsiModule& m : {mul3_on_c8(), natural_on_c5()})
        for (const auto& c : m.a.elements())
            for (Int k : {1, 2, 3, 4}) {
                CHECK(xi(m, k, c) == m.a.add(c, m.apply(k, c)));
                CHECK(xi_prime(m, k, c) == m.a.add(m.a.neg(c), m.apply(k, c)));
            }
}

TEST_CASE("tripling on order eight separates the kernel from the image") {
    PsiModule m = mul3_on_c8();
    PsiSubgroup whole = PsiSubgroup::whole(m);
    CHECK(whole.element_indices.size() == 8);
    CHECK(whole.contains_index(0));
    CHECK(whole.contains_index(7));
    // psi_{-1} = psi_4 is the identity here, so xi_{-1} is doubling
    CHECK(index_set(sd_kernel(whole)) == std::set<Int>{0, 4});
    // xi_prime_2 is also doubling, so the image is the even part
    CHECK(index_set(at_image(whole)) == std::set<Int>{0, 2, 4, 6});
    // the image is strictly larger than the kernel: containment fails
    CHECK(!check_chain(whole));
}

TEST_CASE("natural action on order five keeps the chain intact") {
    PsiModule m = natural_on_c5();
    PsiSubgroup whole = PsiSubgroup::whole(m);
    // psi_{-1} = inversion kills xi_{-1} identically
    CHECK(sd_kernel(whole).size() == 5);
    CHECK(at_image(whole).size() == 5);
    CHECK(check_chain(whole));
}

TEST_CASE("chain check requires an odd residue modulus") {
    PsiModule m = make_psi_module(FinAbGroup({3}), 4, {{3, {{2}}}});
    PsiSubgroup whole = PsiSubgroup::whole(m);
    CHECK_THROWS_AS(at_image(whole), std::domain_error);
    CHECK_THROWS_AS(check_chain(whole), std::domain_error);
    CHECK_THROWS_AS(check_criteria_b(whole), std::domain_error);
    // sd_kernel itself is fine at even modulus; here psi_{-1} doubles,
    // so xi_{-1}(c) = 3c = 0 on the whole group
    CHECK(index_set(sd_kernel(whole)) == std::set<Int>{0, 1, 2});
}

TEST_CASE("fixed classes sit in the kernel exactly when two-torsion") {
    PsiModule m = mul3_on_c8();  // psi_{-1} fixes everything
    CHECK(check_criteria_a(m, {0}));
    CHECK(check_criteria_a(m, {4}));
    CHECK(!check_criteria_a(m, {1}));
    CHECK(!check_criteria_a(m, {2}));
    CHECK(!check_criteria_a(m, {6}));
    // moved classes are out of scope
    CHECK_THROWS_AS(check_criteria_a(natural_on_c5(), {1}), std::domain_error);
    CHECK(check_criteria_a(natural_on_c5(), {0}));
}

TEST_CASE("telescoping power sums vanish on the trace image") {
    CHECK(check_criteria_b(PsiSubgroup::whole(mul3_on_c8())));
    CHECK(check_criteria_b(PsiSubgroup::whole(natural_on_c5())));
    for (const PsiModule& m : enumerate_actions(FinAbGroup({9}), 7))
        CHECK(check_criteria_b(PsiSubgroup::whole(m)));
}

TEST_CASE("prime reports classify the three membership outcomes") {
    CriteriaPrimeReport r = criteria_prime_report(23, 2);
    CHECK(r.classification == "sd_not_at");
    CHECK(r.n2 == 11);
    CHECK(r.n2_odd);
    CHECK(criteria_prime_report(7, 2).classification == "sd_not_at");
    CHECK(criteria_prime_report(7, 2).n2 == 3);
    CHECK(criteria_prime_report(5, 3).classification == "outside_sd");
    CHECK(criteria_prime_report(11, 3).classification == "outside_sd");
    CHECK(criteria_prime_report(7, 1).classification == "no_conclusion");
    CHECK(criteria_prime_report(17, 2).classification == "no_conclusion");
    CHECK(criteria_prime_report(11, 5).classification == "no_conclusion");
    CHECK_THROWS_AS(criteria_prime_report(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(criteria_prime_report(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(criteria_prime_report(7, 0), std::invalid_argument);
}

TEST_CASE("enumerate_actions lists one module per residue-group hom") {
    // oracle: matrices whose phi(n)-th power is the identity map
    for (Int n : {3, 4, 5, 7, 9}) {
        Int phi = 0;
        for (Int k = 1; k < n; ++k)
            if (gcd_int(k, n) == 1) ++phi;
        for (const FinAbGroup& a : {FinAbGroup({5}), FinAbGroup({8}), FinAbGroup({2, 4})}) {
            Int expect = 0;
            for (const IntMat& mat : automorphism_matrices(a)) {
                bool id_power = true;
                for (const auto& x : a.elements()) {
                    GroupElement y = x;
                    for (Int i = 0; i < phi; ++i) y = mat_apply(a, mat, y);
                    if (y != x) id_power = false;
                }
                if (id_power) ++expect;
            }
            std::vector<PsiModule> mods = enumerate_actions(a, n);
            CHECK(static_cast<Int>(mods.size()) == expect);
            std::set<std::vector<Int>> seen;
            for (const PsiModule& m : mods) {
                CHECK(m.n == n);
                CHECK(m.a == a);
                std::vector<Int> sig;
                for (const auto& kv : m.action)
                    for (const auto& row : kv.second)
                        sig.insert(sig.end(), row.begin(), row.end());
                CHECK(seen.insert(sig).second);
            }
        }
    }
    CHECK(enumerate_actions(FinAbGroup({8}), 5).size() == 4);
    // units mod 8 are not cyclic
    CHECK_THROWS_AS(enumerate_actions(FinAbGroup({3}), 8), std::invalid_argument);
}

TEST_CASE("automorphism_matrices enumerates bijective actions exactly once") {
    CHECK(automorphism_matrices(FinAbGroup({8})).size() == 4);
    CHECK(automorphism_matrices(FinAbGroup({2, 2})).size() == 6);
    CHECK(automorphism_matrices(FinAbGroup({2, 4})).size() == 8);
    CHECK(automorphism_matrices(FinAbGroup({3, 3})).size() == 48);
    FinAbGroup a({2, 4});
    std::set<std::vector<Int>> images_seen;
    for (const IntMat& mat : automorphism_matrices(a)) {
        std::vector<Int> perm;
        std::set<Int> hit;
        for (const auto& x : a.elements()) {
            Int idx = a.index_of(mat_apply(a, mat, x));
            perm.push_back(idx);
            hit.insert(idx);
        }
        CHECK(static_cast<Int>(hit.size()) == a.order());
        CHECK(images_seen.insert(perm).second);
        // homomorphism property
        for (const auto& x : a.elements())
            for (const auto& y : a.elements())
                CHECK(mat_apply(a, mat, a.add(x, y)) ==
                      a.add(mat_apply(a, mat, x), mat_apply(a, mat, y)));
    }
}
