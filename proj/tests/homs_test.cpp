#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galmod/homs.hpp"

using namespace galmod;

namespace {

std::vector<FinAbGroup> test_groups() {
    return {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}), FinAbGroup({2, 2}),
            FinAbGroup({5}), FinAbGroup({6}), FinAbGroup({8}), FinAbGroup({2, 4}),
            FinAbGroup({9}), FinAbGroup({3, 3}), FinAbGroup({12})};
}

// Indicator oracle straight from the definition: 1 iff chi does not kill H.
std::vector<Int> indicator_oracle(const FinAbGroup& g, const Subgroup& h) {
    std::vector<Int> out;
    for (const Character& chi : character_group(g)) {
        bool kills_all = true;
        for (Int idx : h.element_indices)
            if (!chi.kills(g.element_at(idx))) kills_all = false;
        out.push_back(kills_all ? 0 : 1);
    }
    return out;
}

}  // namespace

TEST_CASE("c_swan is the indicator of characters not killing the subgroup") {
    for (const FinAbGroup& g : test_groups())
        for (const Subgroup& h : all_subgroups(g)) {
            MonomialHom hom = c_swan(g, h, "r");
            CHECK(hom.domain_kind == DomainKind::characters);
            CHECK(hom.base_tag == "r");
            CHECK(hom.exponents == indicator_oracle(g, h));
        }
    // frozen small cases
    FinAbGroup c3({3});
    CHECK(c_swan(c3, subgroup_generated_by(c3, {{1}}), "r").exponents ==
          std::vector<Int>{0, 1, 1});
    FinAbGroup c4({4});
    CHECK(c_swan(c4, subgroup_generated_by(c4, {{2}}), "r").exponents ==
          std::vector<Int>{0, 1, 0, 1});
    CHECK(c_swan(c4, subgroup_generated_by(c4, {}), "r").exponents ==
          std::vector<Int>{0, 0, 0, 0});
}

TEST_CASE("c_family variant one collapses to the cyclic indicator") {
    for (const FinAbGroup& g : test_groups())
        for (const auto& t : g.elements()) {
            if (t == g.identity()) continue;
            MonomialHom c1 = c_family(g, t, 1, "r");
            Subgroup h = subgroup_generated_by(g, {t});
            CHECK(c1.exponents == indicator_oracle(g, h));
            // defining formula, recomputed exactly
            std::vector<Character> chars = character_group(g);
            for (size_t i = 0; i < chars.size(); ++i) {
                Rat v = pairing(chars[i], t) + pairing(chars[i], g.neg(t));
                CHECK(Rat(c1.exponents[i]) == v);
            }
        }
}

TEST_CASE("c_family variant two is integral and matches its formula") {
    for (const FinAbGroup& g : test_groups())
        for (const auto& t : g.elements()) {
            if (t == g.identity()) continue;
            MonomialHom c2 = c_family(g, t, 2, "r");
            std::vector<Character> chars = character_group(g);
            for (size_t i = 0; i < chars.size(); ++i) {
                Rat v = Rat(2) * pairing(chars[i], t) -
                        pairing(chars[i], g.scalar_mul(2, t));
                CHECK(Rat(c2.exponents[i]) == v);
            }
        }
    FinAbGroup c4({4});
    CHECK_THROWS_AS(c_family(c4, {0}, 1, "r"), std::invalid_argument);
    CHECK_THROWS_AS(c_family(c4, {1}, 3, "r"), std::invalid_argument);
}

TEST_CASE("g_family places its exponents on the orbit of t") {
    FinAbGroup c5({5});
    MonomialHom g1 = g_family(c5, {1}, 1, "s");
    CHECK(g1.domain_kind == DomainKind::group_elements);
    CHECK(g1.exponents == std::vector<Int>{0, 1, 0, 0, 1});
    FinAbGroup c4({4});
    // |t| = 2 doubles instead of splitting
    CHECK(g_family(c4, {2}, 1, "s").exponents == std::vector<Int>{0, 0, 2, 0});
    // variant two: 2 at t, -1 at 2t
    CHECK(g_family(c5, {1}, 2, "s").exponents == std::vector<Int>{0, 2, -1, 0, 0});
    CHECK(g_family(c5, {2}, 2, "s").exponents == std::vector<Int>{0, 0, 2, 0, -1});
    CHECK_THROWS_AS(g_family(c4, {1}, 2, "s"), std::domain_error);
    CHECK_THROWS_AS(g_family(c4, {0}, 1, "s"), std::invalid_argument);
}

TEST_CASE("restriction of c_family to the lattice transposes to g_family") {
    for (const FinAbGroup& g : test_groups())
        for (const auto& t : g.elements()) {
            if (t == g.identity()) continue;
            CHECK(verify_rag_equals_theta_t(c_family(g, t, 1, "r"),
                                            g_family(g, t, 1, "r")));
            if (elem_order(g, t) % 2 == 1)
                CHECK(verify_rag_equals_theta_t(c_family(g, t, 2, "r"),
                                                g_family(g, t, 2, "r")));
        }
    // mismatched sides fail
    FinAbGroup c4({4});
    CHECK(!verify_rag_equals_theta_t(c_family(c4, {1}, 1, "r"),
                                     g_family(c4, {2}, 1, "r")));
}

TEST_CASE("swan1a_g marks the model orbit of t and its negative") {
    FinAbGroup c4({4});
    GaloisModel d(4, {3});  // {1, 3}
    MonomialHom hom = swan1a_g(c4, {1}, d, "s");
    CHECK(hom.domain_kind == DomainKind::group_elements);
    CHECK(hom.exponents == std::vector<Int>{0, 1, 0, 1});
    FinAbGroup c8({8});
    GaloisModel d8(8, {5});  // {1, 5}
    CHECK(swan1a_g(c8, {1}, d8, "s").exponents ==
          std::vector<Int>{0, 1, 0, 1, 0, 1, 0, 1});
    CHECK_THROWS_AS(swan1a_g(c4, {2}, d, "s"), std::invalid_argument);
}

TEST_CASE("cyclic descent identity holds for every model on small cyclic groups") {
    for (Int n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        FinAbGroup g({n});
        for (const auto& t : g.elements()) {
            if (t == g.identity()) continue;
            Int ord = elem_order(g, t);
            for (Int a = 1; a < ord; ++a) {
                if (gcd_int(a, ord) != 1) continue;
                CHECK(verify_swan1a(g, t, GaloisModel(ord, {a})));
            }
            CHECK(verify_swan1a(g, t, GaloisModel::full(ord)));
        }
    }
    FinAbGroup c4({4});
    CHECK_THROWS_AS(verify_swan1a(c4, {1}, GaloisModel(8, {3})), std::invalid_argument);
}

TEST_CASE("paired exponents of the squared family form the odd-order indicator") {
    for (const FinAbGroup& g : test_groups())
        for (const auto& t : g.elements()) {
            if (t == g.identity() || elem_order(g, t) % 2 == 0) continue;
            CHECK(verify_ccc(g, t));
        }
    FinAbGroup c4({4});
    CHECK_THROWS_AS(verify_ccc(c4, {1}), std::domain_error);
    CHECK_THROWS_AS(verify_ccc(c4, {0}), std::invalid_argument);
}

TEST_CASE("delta is two exactly for two-power order") {
    CHECK(delta_of_group(FinAbGroup({2})) == 2);
    CHECK(delta_of_group(FinAbGroup({4})) == 2);
    CHECK(delta_of_group(FinAbGroup({2, 2})) == 2);
    CHECK(delta_of_group(FinAbGroup({8})) == 2);
    CHECK(delta_of_group(FinAbGroup({2, 4})) == 2);
    CHECK(delta_of_group(FinAbGroup({3})) == 1);
    CHECK(delta_of_group(FinAbGroup({6})) == 1);
    CHECK(delta_of_group(FinAbGroup({12})) == 1);
    CHECK(delta_of_group(FinAbGroup({3, 3})) == 1);
    CHECK_THROWS_AS(delta_of_group(FinAbGroup()), std::domain_error);
}

TEST_CASE("paired exponent equals delta on characters separating t") {
    for (const FinAbGroup& g : test_groups()) {
        Int delta = delta_of_group(g);
        for (const auto& t : g.elements()) {
            if (t == g.identity()) continue;
            if (delta == 1 && elem_order(g, t) % 2 == 0) continue;
            for (const Character& chi : character_group(g)) {
                if (chi.kills(t)) continue;
                CHECK(verify_swan2b_exponent(g, t, chi) == delta);
            }
        }
    }
    // inadmissible inputs are rejected
    FinAbGroup c6({6});
    Character chi{c6, {1}};
    CHECK_THROWS_AS(verify_swan2b_exponent(c6, {3}, chi), std::domain_error);
    Character trivial{c6, {0}};
    CHECK_THROWS_AS(verify_swan2b_exponent(c6, {2}, trivial), std::domain_error);
    CHECK_THROWS_AS(verify_swan2b_exponent(c6, {0}, chi), std::invalid_argument);
}

TEST_CASE("resolvent data yields one labeled indicator hom per place") {
    FinAbGroup g({2, 4});
    std::vector<RamificationDatum> data = {{"2", {1, 0}}, {"3", {0, 1}}, {"7", {1, 2}}};
    std::vector<MonomialHom> homs = resolvent_exponents(g, data);
    REQUIRE(homs.size() == 3);
    for (size_t i = 0; i < homs.size(); ++i) {
        CHECK(homs[i].base_tag == "pi_" + data[i].place_label);
        Subgroup h = subgroup_generated_by(g, {data[i].s_v});
        CHECK(homs[i].exponents == indicator_oracle(g, h));
    }
    CHECK(resolvent_exponents(g, {}).empty());
}
