#include "galmod/psi_model.hpp"

#include <algorithm>
#include <set>

namespace galmod {

namespace {

GroupElement apply_matrix(const FinAbGroup& a, const IntMat& m, const GroupElement& x) {
    int k = a.num_gens();
    GroupElement out(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        Int acc = 0;
        for (int j = 0; j < k; ++j)
            acc = mod_reduce(acc + mod_reduce(m[i][j] * x[j], a.factors[i]), a.factors[i]);
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

bool matrix_well_defined(const FinAbGroup& a, const IntMat& m) {
    int k = a.num_gens();
    if (static_cast<int>(m.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(m[i].size()) != k) return false;
        for (int j = 0; j < k; ++j) {
            Int need = a.factors[i] / gcd_int(a.factors[i], a.factors[j]);
            if (mod_reduce(m[i][j], need) != 0) return false;
        }
    }
    return true;
}

bool matrix_bijective(const FinAbGroup& a, const IntMat& m) {
    Int n = a.order();
    std::set<Int> image;
    for (Int i = 0; i < n; ++i)
        image.insert(a.index_of(apply_matrix(a, m, a.element_at(i))));
    return static_cast<Int>(image.size()) == n;
}

IntMat reduce_matrix(const FinAbGroup& a, IntMat m) {
    for (int i = 0; i < a.num_gens(); ++i)
        for (auto& x : m[i]) x = mod_reduce(x, a.factors[i]);
    return m;
}

IntMat mat_mul(const FinAbGroup& a, const IntMat& l, const IntMat& r) {
    int k = a.num_gens();
    IntMat out(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int acc = 0;
            for (int t = 0; t < k; ++t)
                acc = mod_reduce(acc + mod_reduce(l[i][t] * r[t][j], a.factors[i]),
                                 a.factors[i]);
            out[i][j] = acc;
        }
    return out;
}

IntMat identity_matrix(int k) {
    IntMat m(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

std::vector<Int> unit_residues(Int n) {
    std::vector<Int> out;
    if (n == 1) return {0};  // the unit group mod 1 is trivial
    for (Int r = 1; r < n; ++r)
        if (gcd_int(r, n) == 1) out.push_back(r);
    return out;
}

}  // namespace

GroupElement PsiModule::apply(Int k, const GroupElement& x) const {
    Int r = mod_reduce(k, n);
    auto it = action.find(r);
    if (it == action.end())
        throw std::domain_error("PsiModule::apply: residue not coprime to n");
    return apply_matrix(a, it->second, a.reduce(x));
}

PsiModule make_psi_module(const FinAbGroup& a, Int n,
                          const std::map<Int, IntMat>& generator_images) {
    if (n < 1) throw std::invalid_argument("make_psi_module: n must be >= 1");
    PsiModule m;
    m.a = a;
    m.n = n;
    int k = a.num_gens();
    Int one = mod_reduce(1, n);
    m.action[one] = identity_matrix(k);

    for (auto& [res, mat] : generator_images) {
        Int r = mod_reduce(res, n);
        if (n > 1 && gcd_int(r, n) != 1)
            throw std::invalid_argument("make_psi_module: generator residue not coprime to n");
        IntMat red = reduce_matrix(a, mat);
        if (!matrix_well_defined(a, red))
            throw std::invalid_argument("make_psi_module: matrix not a well-defined endomorphism");
        if (!matrix_bijective(a, red))
            throw std::invalid_argument("make_psi_module: matrix not bijective");
        auto it = m.action.find(r);
        if (it != m.action.end() && it->second != red)
            throw std::invalid_argument("make_psi_module: inconsistent action table");
        m.action[r] = red;
    }

    // Multiplicative closure; detects non-multiplicative tables by clash.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Int, IntMat>> cur(m.action.begin(), m.action.end());
        for (const auto& [r1, m1] : cur)
            for (const auto& [r2, m2] : cur) {
                Int r = n == 1 ? 0 : mul_mod(r1, r2, n);
                IntMat prod = mat_mul(a, m1, m2);
                auto it = m.action.find(r);
                if (it == m.action.end()) {
                    m.action[r] = prod;
                    grew = true;
                } else if (it->second != prod) {
                    throw std::invalid_argument("make_psi_module: action not multiplicative");
                }
            }
    }

    for (Int r : unit_residues(n))
        if (!m.action.count(r))
            throw std::invalid_argument("make_psi_module: generators do not span (Z/nZ)^x");
    return m;
}

PsiSubgroup PsiSubgroup::whole(const PsiModule& m) {
    PsiSubgroup s;
    s.module = m;
    Int n = m.a.order();
    for (Int i = 0; i < n; ++i) s.element_indices.push_back(i);
    return s;
}

bool PsiSubgroup::contains_index(Int idx) const {
    return std::binary_search(element_indices.begin(), element_indices.end(), idx);
}

GroupElement xi(const PsiModule& m, Int k, const GroupElement& c) {
    return m.a.add(m.a.reduce(c), m.apply(k, c));
}

GroupElement xi_prime(const PsiModule& m, Int k, const GroupElement& c) {
    return m.a.add(m.a.neg(m.a.reduce(c)), m.apply(k, c));
}

std::vector<Int> sd_kernel(const PsiSubgroup& r) {
    std::vector<Int> out;
    const FinAbGroup& a = r.module.a;
    for (Int idx : r.element_indices) {
        GroupElement c = a.element_at(idx);
        if (xi(r.module, -1, c) == a.identity()) out.push_back(idx);
    }
    return out;
}

std::vector<Int> at_image(const PsiSubgroup& r) {
    if (r.module.n % 2 == 0)
        throw std::domain_error("at_image: n must be odd");
    std::set<Int> out;
    const FinAbGroup& a = r.module.a;
    for (Int idx : r.element_indices)
        out.insert(a.index_of(xi_prime(r.module, 2, a.element_at(idx))));
    return std::vector<Int>(out.begin(), out.end());
}

bool check_chain(const PsiSubgroup& r) {
    if (r.module.n % 2 == 0)
        throw std::domain_error("check_chain: n must be odd");
    std::vector<Int> sd = sd_kernel(r);
    std::vector<Int> at = at_image(r);
    for (Int idx : sd)
        if (!r.contains_index(idx)) return false;
    for (Int idx : at)
        if (!std::binary_search(sd.begin(), sd.end(), idx)) return false;
    return true;
}

bool check_criteria_a(const PsiModule& m, const GroupElement& c) {
    GroupElement cr = m.a.reduce(c);
    if (m.apply(-1, cr) != cr)
        throw std::domain_error("check_criteria_a: c must be fixed by psi_{-1}");
    bool in_kernel = xi(m, -1, cr) == m.a.identity();
    bool order_divides_two = m.a.add(cr, cr) == m.a.identity();
    // Under the hypothesis these agree; report membership.
    if (in_kernel != order_divides_two)
        throw std::logic_error("check_criteria_a: membership and 2-torsion disagree");
    return in_kernel;
}

bool check_criteria_b(const PsiSubgroup& r) {
    const PsiModule& m = r.module;
    if (m.n % 2 == 0) throw std::domain_error("check_criteria_b: n must be odd");
    Int n2 = mult_order(2, m.n);
    const FinAbGroup& a = m.a;
    for (Int idx : at_image(r)) {
        GroupElement c = a.element_at(idx);
        // Telescoping: sum_{j=0}^{n2-1} psi_{2^j}(c) = 0 for c in the image.
        GroupElement acc = a.identity();
        Int pw = 1;
        for (Int j = 0; j < n2; ++j) {
            acc = a.add(acc, m.apply(pw, c));
            pw = mul_mod(pw, 2, m.n);
        }
        if (acc != a.identity()) return false;
        if (m.apply(2, c) == c && a.scalar_mul(n2, c) != a.identity()) return false;
    }
    return true;
}

CriteriaPrimeReport criteria_prime_report(Int p, Int c_order) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("criteria_prime_report: p must be an odd prime");
    if (c_order < 1) throw std::invalid_argument("criteria_prime_report: order must be >= 1");
    CriteriaPrimeReport rep;
    rep.p = p;
    rep.c_order = c_order;
    rep.n2 = mult_order(2, p);
    rep.n2_odd = rep.n2 % 2 == 1;
    if (c_order == 1) {
        rep.classification = "no_conclusion";
    } else if ((p - 1) % c_order != 0) {
        rep.classification = "outside_sd";  // c^{(p-1)/2} realizable but not self-dual
    } else if (c_order == 2 && mod_reduce(p, 8) == 7) {
        rep.classification = "sd_not_at";  // self-dual yet not a trace class
    } else {
        rep.classification = "no_conclusion";
    }
    return rep;
}

std::vector<IntMat> automorphism_matrices(const FinAbGroup& a) {
    int k = a.num_gens();
    if (a.order() > kEnumBound)
        throw resource_error("automorphism_matrices: order exceeds enumeration bound");
    std::vector<IntMat> out;
    if (k == 0) {
        out.push_back(IntMat{});
        return out;
    }
    // Entry (i,j) ranges over multiples of d_i/gcd(d_i,d_j) below d_i.
    std::vector<std::vector<Int>> entry_choices;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int step = a.factors[i] / gcd_int(a.factors[i], a.factors[j]);
            std::vector<Int> ch;
            for (Int v = 0; v < a.factors[i]; v += step) ch.push_back(v);
            entry_choices.push_back(ch);
        }
    std::vector<size_t> pick(entry_choices.size(), 0);
    while (true) {
        IntMat m(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m[i][j] = entry_choices[static_cast<size_t>(i * k + j)]
                                       [pick[static_cast<size_t>(i * k + j)]];
        if (matrix_bijective(a, m)) out.push_back(m);
        size_t t = 0;
        for (; t < pick.size(); ++t) {
            if (++pick[t] < entry_choices[t].size()) break;
            pick[t] = 0;
        }
        if (t == pick.size()) break;
    }
    return out;
}

std::vector<PsiModule> enumerate_actions(const FinAbGroup& a, Int n) {
    std::vector<Int> units = unit_residues(n);
    // Find a generator of (Z/nZ)^x; required cyclic here.
    Int gen = -1;
    Int phi = static_cast<Int>(units.size());
    if (n <= 2) {
        std::vector<PsiModule> out;
        out.push_back(make_psi_module(a, n, {}));
        return out;
    }
    for (Int r : units)
        if (mult_order(r, n) == phi) { gen = r; break; }
    if (gen < 0)
        throw std::invalid_argument("enumerate_actions: (Z/nZ)^x is not cyclic");
    std::vector<PsiModule> out;
    for (const IntMat& m : automorphism_matrices(a)) {
        // Hom condition: image of the generator has order dividing phi(n).
        IntMat acc = m;
        bool ok = false;
        IntMat id = IntMat();
        {
            int k = a.num_gens();
            id = IntMat(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), 0));
            for (int i = 0; i < k; ++i) id[i][i] = 1;
        }
        IntMat pw = id;
        for (Int e = 1; e <= phi; ++e) {
            pw = mat_mul(a, pw, m);
            if (e == phi) ok = (pw == id);
        }
        if (!ok) continue;
        out.push_back(make_psi_module(a, n, {{gen, m}}));
    }
    return out;
}

}  // namespace galmod
