#include "galmod/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galmod/matrix.hpp"

namespace galmod {

FinAbGroup::FinAbGroup(std::vector<Int> invariant_factors)
    : factors(std::move(invariant_factors)) {
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw std::invalid_argument("FinAbGroup: invariant factors must be >= 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw std::invalid_argument("FinAbGroup: factors must form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::from_moduli(const std::vector<Int>& moduli) {
    std::vector<Int> kept;
    for (Int m : moduli) {
        if (m < 1) throw std::invalid_argument("from_moduli: moduli must be >= 1");
        if (m > 1) kept.push_back(m);
    }
    if (kept.empty()) return FinAbGroup();
    int k = static_cast<int>(kept.size());
    IntMat diag(k, std::vector<Int>(k, 0));
    for (int i = 0; i < k; ++i) diag[i][i] = kept[i];
    std::vector<Int> d = snf_diagonal(diag);
    std::vector<Int> inv;
    for (Int x : d)
        if (x > 1) inv.push_back(x);
    return FinAbGroup(inv);
}

Int FinAbGroup::order() const {
    Int n = 1;
    for (Int d : factors) n *= d;
    return n;
}

GroupElement FinAbGroup::reduce(GroupElement e) const {
    if (e.size() != factors.size())
        throw std::invalid_argument("FinAbGroup: element has wrong number of coordinates");
    for (size_t i = 0; i < e.size(); ++i) e[i] = mod_reduce(e[i], factors[i]);
    return e;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (a.size() != factors.size() || b.size() != factors.size())
        throw std::invalid_argument("FinAbGroup: element has wrong number of coordinates");
    GroupElement c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = mod_reduce(a[i] + b[i], factors[i]);
    return c;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
    GroupElement c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = mod_reduce(-a[i], factors[i]);
    return c;
}

GroupElement FinAbGroup::scalar_mul(Int k, const GroupElement& a) const {
    GroupElement c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c[i] = mod_reduce(mod_reduce(k, factors[i]) * a[i], factors[i]);
    return c;
}

Int FinAbGroup::index_of(const GroupElement& e) const {
    GroupElement r = reduce(e);
    Int idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + r[i];
    return idx;
}

GroupElement FinAbGroup::element_at(Int idx) const {
    GroupElement e(factors.size(), 0);
    for (int i = num_gens() - 1; i >= 0; --i) {
        e[i] = idx % factors[i];
        idx /= factors[i];
    }
    return e;
}

std::vector<GroupElement> FinAbGroup::elements() const {
    Int n = order();
    if (n > kEnumBound)
        throw resource_error("FinAbGroup::elements: order exceeds enumeration bound");
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(n));
    for (Int i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

Int elem_order(const FinAbGroup& g, const GroupElement& s) {
    GroupElement r = g.reduce(s);
    Int ord = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        Int d = g.factors[i];
        ord = lcm_int(ord, d / gcd_int(d, r[i]));
    }
    return ord;
}

PowerMap power_map(const FinAbGroup& g, Int k) {
    PowerMap pm;
    pm.k = k;
    Int n = g.order();
    if (n > kEnumBound) throw resource_error("power_map: order exceeds enumeration bound");
    pm.images.resize(static_cast<size_t>(n));
    for (Int i = 0; i < n; ++i)
        pm.images[static_cast<size_t>(i)] = g.index_of(g.scalar_mul(k, g.element_at(i)));
    pm.is_automorphism = gcd_int(mod_reduce(k, n == 1 ? 1 : n), n) == 1 || n == 1;
    return pm;
}

Int mult_order(Int k, Int n) {
    if (n < 1) throw std::invalid_argument("mult_order: modulus must be >= 1");
    if (n == 1) return 1;
    Int r = mod_reduce(k, n);
    if (gcd_int(r, n) != 1)
        throw std::domain_error("mult_order: argument not coprime to modulus");
    Int m = 1, x = r;
    while (x != 1) {
        x = mul_mod(x, r, n);
        ++m;
    }
    return m;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const FinAbGroup& g) {
    Int n = g.order();
    if (n > kEnumBound)
        throw resource_error("cyclic_subgroups: order exceeds enumeration bound");
    // Dedupe by the full element-index set of <x>; the canonical generator is
    // the lexicographically least one, which is the first seen in index order.
    std::map<std::vector<Int>, CyclicSubgroup> seen;
    for (Int i = 0; i < n; ++i) {
        GroupElement x = g.element_at(i);
        std::vector<Int> members;
        GroupElement cur = g.identity();
        do {
            members.push_back(g.index_of(cur));
            cur = g.add(cur, x);
        } while (cur != g.identity());
        std::sort(members.begin(), members.end());
        if (!seen.count(members))
            seen[members] = CyclicSubgroup{x, static_cast<Int>(members.size())};
    }
    std::vector<CyclicSubgroup> out;
    for (auto& [members, sub] : seen) out.push_back(sub);
    std::sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.generator < b.generator;
    });
    return out;
}

Subgroup subgroup_generated_by(const FinAbGroup& g,
                               const std::vector<GroupElement>& gens) {
    std::set<Int> members = {g.index_of(g.identity())};
    std::vector<Int> frontier(members.begin(), members.end());
    while (!frontier.empty()) {
        std::vector<Int> next;
        for (Int idx : frontier) {
            GroupElement e = g.element_at(idx);
            for (const auto& x : gens) {
                Int j = g.index_of(g.add(e, x));
                if (members.insert(j).second) next.push_back(j);
            }
        }
        frontier = std::move(next);
    }
    Subgroup s;
    s.element_indices.assign(members.begin(), members.end());
    s.generators = gens;
    return s;
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& g) {
    Int n = g.order();
    if (n > kEnumBound)
        throw resource_error("all_subgroups: order exceeds enumeration bound");
    std::map<std::vector<Int>, Subgroup> seen;
    Subgroup triv = subgroup_generated_by(g, {});
    seen[triv.element_indices] = triv;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subgroup> current;
        for (auto& [k, v] : seen) current.push_back(v);
        for (const auto& sub : current) {
            for (Int i = 0; i < n; ++i) {
                std::vector<GroupElement> gens = sub.generators;
                gens.push_back(g.element_at(i));
                Subgroup bigger = subgroup_generated_by(g, gens);
                if (!seen.count(bigger.element_indices)) {
                    seen[bigger.element_indices] = bigger;
                    grew = true;
                }
            }
        }
    }
    std::vector<Subgroup> out;
    for (auto& [k, v] : seen) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.element_indices < b.element_indices;
    });
    return out;
}

QuotientByCyclic quotient_by_cyclic(Int n, Int k, const GroupElement& x) {
    if (n < 2) throw std::invalid_argument("quotient_by_cyclic: n must be >= 2");
    if (k < 1) throw std::invalid_argument("quotient_by_cyclic: k must be >= 1");
    if (static_cast<Int>(x.size()) != k)
        throw std::invalid_argument("quotient_by_cyclic: x has wrong dimension");
    // C_n^k / <x> = Z^k / (rows: x, n*e_1, ..., n*e_k).
    IntMat rel;
    std::vector<Int> xr(x);
    for (auto& c : xr) c = mod_reduce(c, n);
    rel.push_back(xr);
    for (Int i = 0; i < k; ++i) {
        std::vector<Int> row(static_cast<size_t>(k), 0);
        row[static_cast<size_t>(i)] = n;
        rel.push_back(row);
    }
    std::vector<Int> d = snf_diagonal(rel);
    QuotientByCyclic q;
    Int divisible = 0;
    for (Int di : d) {
        if (di > 1) q.factors.push_back(di);
        if (di != 0 && di % n == 0) ++divisible;
    }
    q.surjects_onto_rank_k_minus_1 = divisible >= k - 1;
    return q;
}

namespace {

// Partitions of m, largest part first.
void partitions_of(Int m, std::vector<std::vector<Int>>& out) {
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int rem, Int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (Int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
}

}  // namespace

std::vector<FinAbGroup> all_abelian_groups(Int max_order) {
    std::vector<FinAbGroup> out;
    for (Int n = 1; n <= max_order; ++n) {
        auto fac = factorize(n);
        // One partition of each prime exponent; invariant factors come from
        // aligning the partitions largest-part-first.
        std::vector<std::vector<std::vector<Int>>> parts;
        for (auto& [p, e] : fac) {
            std::vector<std::vector<Int>> ps;
            partitions_of(e, ps);
            parts.push_back(ps);
        }
        std::vector<size_t> pick(parts.size(), 0);
        while (true) {
            size_t maxlen = 0;
            for (size_t i = 0; i < parts.size(); ++i)
                maxlen = std::max(maxlen, parts[i][pick[i]].size());
            std::vector<Int> inv(maxlen, 1);
            for (size_t i = 0; i < parts.size(); ++i) {
                Int p = fac[i].first;
                const auto& lambda = parts[i][pick[i]];
                for (size_t j = 0; j < lambda.size(); ++j) {
                    Int pw = 1;
                    for (Int t = 0; t < lambda[j]; ++t) pw *= p;
                    inv[j] *= pw;  // largest invariant factor gets largest part
                }
            }
            // inv is sorted with the largest factor first; reverse to d_1 | d_2 | ...
            std::reverse(inv.begin(), inv.end());
            std::vector<Int> cleaned;
            for (Int d : inv)
                if (d > 1) cleaned.push_back(d);
            out.emplace_back(cleaned);
            // Next choice vector.
            size_t i = 0;
            for (; i < parts.size(); ++i) {
                if (++pick[i] < parts[i].size()) break;
                pick[i] = 0;
            }
            if (i == parts.size()) break;
        }
    }
    return out;
}

}  // namespace galmod
