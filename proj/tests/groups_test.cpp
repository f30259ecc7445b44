#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "galmod/groups.hpp"
#include "galmod/matrix.hpp"

using namespace galmod;

namespace {

// Independent order oracle: repeated addition until the identity returns.
Int order_oracle(const FinAbGroup& g, const GroupElement& s) {
    GroupElement acc = g.reduce(s);
    Int m = 1;
    while (acc != g.identity()) {
        acc = g.add(acc, s);
        ++m;
    }
    return m;
}

// Cyclic subgroups as element-index sets, generated one element at a time.
std::set<std::set<Int>> cyclic_sets_oracle(const FinAbGroup& g) {
    std::set<std::set<Int>> out;
    for (const GroupElement& x : g.elements()) {
        std::set<Int> members;
        GroupElement acc = g.identity();
        do {
            members.insert(g.index_of(acc));
            acc = g.add(acc, x);
        } while (acc != g.identity());
        members.insert(0);
        out.insert(members);
    }
    return out;
}

// Number of abelian groups of order n: product over p^e of partitions of e.
Int partition_count(Int e) {
    std::vector<Int> p(static_cast<size_t>(e) + 1, 0);
    p[0] = 1;
    for (Int part = 1; part <= e; ++part)
        for (Int total = part; total <= e; ++total)
            p[static_cast<size_t>(total)] += p[static_cast<size_t>(total - part)];
    return p[static_cast<size_t>(e)];
}

Int abelian_count_oracle(Int n) {
    Int out = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        out *= partition_count(e);
    }
    return out;
}

}  // namespace

TEST_CASE("from_moduli canonicalizes to invariant factors") {
    CHECK(FinAbGroup::from_moduli({2, 3}).factors == std::vector<Int>{6});
    CHECK(FinAbGroup::from_moduli({4, 6}).factors == std::vector<Int>{2, 12});
    CHECK(FinAbGroup::from_moduli({6, 4}).factors == std::vector<Int>{2, 12});
    CHECK(FinAbGroup::from_moduli({1}).factors.empty());
    CHECK(FinAbGroup::from_moduli({}).factors.empty());
    CHECK(FinAbGroup::from_moduli({2, 2}).factors == std::vector<Int>{2, 2});
    CHECK(FinAbGroup::from_moduli({12, 18}).factors == std::vector<Int>{6, 36});
    CHECK_THROWS_AS(FinAbGroup::from_moduli({0}), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup({1, 2}), std::invalid_argument);
}

TEST_CASE("order, exponent, and element enumeration are consistent") {
    FinAbGroup g({2, 12});
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(FinAbGroup().order() == 1);
    CHECK(FinAbGroup().exponent() == 1);
    std::vector<GroupElement> els = g.elements();
    REQUIRE(static_cast<Int>(els.size()) == 24);
    CHECK(els[0] == g.identity());
    for (Int i = 0; i < 24; ++i) {
        CHECK(g.index_of(els[static_cast<size_t>(i)]) == i);
        CHECK(g.element_at(i) == els[static_cast<size_t>(i)]);
    }
    // lexicographic enumeration
    CHECK(std::is_sorted(els.begin(), els.end()));
    CHECK_THROWS_AS(FinAbGroup({10007}).elements(), resource_error);
}

TEST_CASE("group operations satisfy the abelian axioms") {
    FinAbGroup g({2, 4});
    std::vector<GroupElement> els = g.elements();
    for (const auto& a : els)
        for (const auto& b : els) {
            CHECK(g.add(a, b) == g.add(b, a));
            CHECK(g.add(a, g.neg(a)) == g.identity());
            for (const auto& c : els)
                CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
        }
    CHECK(g.reduce({-1, -1}) == GroupElement{1, 3});
    CHECK(g.reduce({2, 4}) == g.identity());
}

TEST_CASE("scalar_mul matches repeated addition for either sign") {
    FinAbGroup g({3, 6});
    for (const auto& a : g.elements())
        for (Int k = -7; k <= 7; ++k) {
            GroupElement expect = g.identity();
            for (Int i = 0; i < (k < 0 ? -k : k); ++i)
                expect = g.add(expect, k < 0 ? g.neg(a) : a);
            CHECK(g.scalar_mul(k, a) == expect);
        }
}

TEST_CASE("elem_order matches the iteration oracle and divides the exponent") {
    for (const FinAbGroup& g : {FinAbGroup({8}), FinAbGroup({2, 4}), FinAbGroup({3, 3}), FinAbGroup({2, 12})})
        for (const auto& s : g.elements()) {
            Int ord = elem_order(g, s);
            CHECK(ord == order_oracle(g, s));
            CHECK(g.exponent() % ord == 0);
        }
    CHECK(elem_order(FinAbGroup({2, 12}), {1, 4}) == 6);
}

TEST_CASE("power_map tabulates multiplication and flags automorphisms") {
    for (const FinAbGroup& g : {FinAbGroup({12}), FinAbGroup({2, 4})})
        for (Int k = -3; k <= 13; ++k) {
            PowerMap pm = power_map(g, k);
            CHECK(pm.is_automorphism == (gcd_int(k, g.order()) == 1));
            for (Int i = 0; i < g.order(); ++i)
                CHECK(pm.images[static_cast<size_t>(i)] ==
                      g.index_of(g.scalar_mul(k, g.element_at(i))));
        }
    // composition: the k1-map after the k2-map is the (k1*k2)-map
    FinAbGroup g({2, 4});
    for (Int k1 = 1; k1 <= 8; ++k1)
        for (Int k2 = 1; k2 <= 8; ++k2) {
            PowerMap a = power_map(g, k1), b = power_map(g, k2),
                     c = power_map(g, k1 * k2);
            for (Int i = 0; i < g.order(); ++i)
                CHECK(a.images[static_cast<size_t>(b.images[static_cast<size_t>(i)])] ==
                      c.images[static_cast<size_t>(i)]);
        }
}

TEST_CASE("mult_order matches brute force on coprime residues") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(2, 23) == 11);
    CHECK(mult_order(1, 1) == 1);
    for (Int n = 1; n <= 60; ++n)
        for (Int k = 1; k < n; ++k) {
            if (gcd_int(k, n) != 1) {
                CHECK_THROWS_AS(mult_order(k, n), std::domain_error);
                continue;
            }
            Int m = 1, acc = k % n;
            while (acc != 1 % n) {
                acc = (acc * k) % n;
                ++m;
            }
            CHECK(mult_order(k, n) == m);
        }
}

TEST_CASE("cyclic_subgroups lists each cyclic subgroup exactly once") {
    for (const FinAbGroup& g : {FinAbGroup({6}), FinAbGroup({2, 2}), FinAbGroup({2, 4}),
                                FinAbGroup({8}), FinAbGroup({3, 3}), FinAbGroup({2, 12})}) {
        std::set<std::set<Int>> expect = cyclic_sets_oracle(g);
        std::vector<CyclicSubgroup> got = cyclic_subgroups(g);
        CHECK(got.size() == expect.size());
        std::set<std::set<Int>> seen;
        for (const CyclicSubgroup& c : got) {
            CHECK(elem_order(g, c.generator) == c.order);
            std::set<Int> members;
            GroupElement acc = g.identity();
            for (Int i = 0; i < c.order; ++i) {
                members.insert(g.index_of(acc));
                acc = g.add(acc, c.generator);
            }
            CHECK(expect.count(members) == 1);
            CHECK(seen.insert(members).second);
            // canonical generator is the lex-least one
            for (Int idx : members) {
                GroupElement e = g.element_at(idx);
                if (elem_order(g, e) == c.order) {
                    CHECK(!(e < c.generator));
                }
            }
        }
    }
    // a cyclic group has one subgroup per divisor
    CHECK(cyclic_subgroups(FinAbGroup({6})).size() == 4);
    CHECK(cyclic_subgroups(FinAbGroup({12})).size() == 6);
    // rank two: the maximal-order subgroups overlap, the count drops
    CHECK(cyclic_subgroups(FinAbGroup({2, 2})).size() == 4);
    CHECK(cyclic_subgroups(FinAbGroup({2, 4})).size() == 6);
}

TEST_CASE("all_subgroups returns closed sets and known counts") {
    CHECK(all_subgroups(FinAbGroup({4})).size() == 3);
    CHECK(all_subgroups(FinAbGroup({2, 2})).size() == 5);
    CHECK(all_subgroups(FinAbGroup({6})).size() == 4);
    CHECK(all_subgroups(FinAbGroup({2, 4})).size() == 8);
    CHECK(all_subgroups(FinAbGroup({3, 3})).size() == 6);
    for (const FinAbGroup& g : {FinAbGroup({2, 4}), FinAbGroup({3, 3}), FinAbGroup({12})}) {
        std::set<std::vector<Int>> seen;
        for (const Subgroup& h : all_subgroups(g)) {
            CHECK(seen.insert(h.element_indices).second);
            CHECK(std::is_sorted(h.element_indices.begin(), h.element_indices.end()));
            CHECK(g.order() % h.order() == 0);
            std::set<Int> members(h.element_indices.begin(), h.element_indices.end());
            CHECK(members.count(0) == 1);
            for (Int i : h.element_indices)
                for (Int j : h.element_indices)
                    CHECK(members.count(g.index_of(
                              g.add(g.element_at(i), g.element_at(j)))) == 1);
            // the stored generators really generate the subgroup
            CHECK(subgroup_generated_by(g, h.generators).element_indices ==
                  h.element_indices);
        }
        // every cyclic subgroup appears
        CHECK(all_subgroups(g).size() >= cyclic_subgroups(g).size());
    }
}

TEST_CASE("subgroup_generated_by handles empty and redundant generators") {
    FinAbGroup g({2, 4});
    Subgroup trivial = subgroup_generated_by(g, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.element_indices == std::vector<Int>{0});
    Subgroup whole = subgroup_generated_by(g, {{1, 0}, {0, 1}});
    CHECK(whole.order() == 8);
    Subgroup redundant = subgroup_generated_by(g, {{0, 2}, {0, 1}, {0, 3}});
    CHECK(redundant.order() == 4);
}

TEST_CASE("quotient_by_cyclic matches the presentation-matrix oracle") {
    for (Int n : {2, 3, 4, 6})
        for (Int k : {1, 2, 3}) {
            FinAbGroup big(std::vector<Int>(static_cast<size_t>(k), n));
            for (const auto& x : big.elements()) {
                QuotientByCyclic q = quotient_by_cyclic(n, k, x);
                // oracle: Smith form of the relation rows {n*e_i, x}
                IntMat rel;
                for (Int i = 0; i < k; ++i) {
                    std::vector<Int> row(static_cast<size_t>(k), 0);
                    row[static_cast<size_t>(i)] = n;
                    rel.push_back(row);
                }
                rel.push_back(x);
                std::vector<Int> d = snf_diagonal(rel);
                std::vector<Int> expect;
                for (Int v : d)
                    if (v > 1) expect.push_back(v);
                CHECK(q.factors == expect);
                Int div_by_n = 0;
                for (Int v : q.factors)
                    if (v % n == 0) ++div_by_n;
                CHECK(q.surjects_onto_rank_k_minus_1 == (div_by_n >= k - 1));
                CHECK(q.surjects_onto_rank_k_minus_1);
            }
        }
}

TEST_CASE("all_abelian_groups enumerates invariant-factor lists without repeats") {
    std::vector<FinAbGroup> gs = all_abelian_groups(30);
    Int expect_total = 0;
    for (Int n = 1; n <= 30; ++n) expect_total += abelian_count_oracle(n);
    CHECK(static_cast<Int>(gs.size()) == expect_total);
    CHECK(expect_total == 47);
    std::set<std::vector<Int>> seen;
    for (const FinAbGroup& g : gs) {
        CHECK(g.order() <= 30);
        CHECK(seen.insert(g.factors).second);
        // valid invariant factors by reconstruction
        CHECK(FinAbGroup::from_moduli(g.factors).factors == g.factors);
    }
    // per-order spot checks
    Int order16 = 0;
    for (const FinAbGroup& g : gs)
        if (g.order() == 16) ++order16;
    CHECK(order16 == 5);
}
