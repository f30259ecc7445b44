#include "galmod/homs.hpp"

namespace galmod {

MonomialHom c_swan(const FinAbGroup& g, const Subgroup& h, const std::string& base_tag) {
    MonomialHom hom;
    hom.group = g;
    hom.domain_kind = DomainKind::characters;
    hom.base_tag = base_tag;
    auto chars = character_group(g);
    hom.exponents.resize(chars.size());
    for (size_t c = 0; c < chars.size(); ++c)
        hom.exponents[c] = chars[c].kills_subgroup(h.generators) ? 0 : 1;
    return hom;
}

MonomialHom c_family(const FinAbGroup& g, const GroupElement& t, int variant,
                     const std::string& base_tag) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("c_family: variant must be 1 or 2");
    GroupElement tr = g.reduce(t);
    if (tr == g.identity()) throw std::invalid_argument("c_family: t must not be the identity");
    MonomialHom hom;
    hom.group = g;
    hom.domain_kind = DomainKind::characters;
    hom.base_tag = base_tag;
    auto chars = character_group(g);
    hom.exponents.resize(chars.size());
    GroupElement tinv = g.neg(tr);
    GroupElement tsq = g.add(tr, tr);
    for (size_t c = 0; c < chars.size(); ++c) {
        Rat e = (variant == 1)
                    ? pairing(chars[c], tr) + pairing(chars[c], tinv)
                    : Rat(2) * pairing(chars[c], tr) - pairing(chars[c], tsq);
        if (!e.is_integer()) throw std::logic_error("c_family: non-integral exponent");
        hom.exponents[c] = e.num;
    }
    return hom;
}

MonomialHom g_family(const FinAbGroup& g, const GroupElement& t, int variant,
                     const std::string& base_tag) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("g_family: variant must be 1 or 2");
    GroupElement tr = g.reduce(t);
    if (tr == g.identity()) throw std::invalid_argument("g_family: t must not be the identity");
    Int ord = elem_order(g, tr);
    MonomialHom hom;
    hom.group = g;
    hom.domain_kind = DomainKind::group_elements;
    hom.base_tag = base_tag;
    hom.exponents.assign(static_cast<size_t>(g.order()), 0);
    if (variant == 1) {
        if (ord == 2) {
            hom.exponents[static_cast<size_t>(g.index_of(tr))] = 2;
        } else {
            hom.exponents[static_cast<size_t>(g.index_of(tr))] += 1;
            hom.exponents[static_cast<size_t>(g.index_of(g.neg(tr)))] += 1;
        }
    } else {
        if (ord % 2 == 0)
            throw std::domain_error("g_family: variant 2 requires |t| odd");
        hom.exponents[static_cast<size_t>(g.index_of(tr))] += 2;
        hom.exponents[static_cast<size_t>(g.index_of(g.add(tr, tr)))] -= 1;
    }
    return hom;
}

bool verify_rag_equals_theta_t(const MonomialHom& c, const MonomialHom& g_hom) {
    if (c.domain_kind != DomainKind::characters ||
        g_hom.domain_kind != DomainKind::group_elements)
        throw std::invalid_argument("verify_rag_equals_theta_t: domain kinds mismatched");
    if (!(c.group == g_hom.group))
        throw std::invalid_argument("verify_rag_equals_theta_t: different groups");
    const FinAbGroup& g = c.group;
    IntLattice a_hat = a_hat_lattice(g);
    for (const auto& psi : a_hat.basis) {
        Int lhs = 0;
        for (size_t i = 0; i < psi.size(); ++i) lhs += c.exponents[i] * psi[i];
        Int rhs = theta_transpose_exponent(g, g_hom.exponents, psi);
        if (lhs != rhs) return false;
    }
    return true;
}

MonomialHom swan1a_g(const FinAbGroup& g, const GroupElement& t,
                     const GaloisModel& model, const std::string& base_tag) {
    GroupElement tr = g.reduce(t);
    Int n = elem_order(g, tr);
    if (model.modulus != n)
        throw std::invalid_argument("swan1a_g: model modulus must equal |t|");
    MonomialHom hom;
    hom.group = g;
    hom.domain_kind = DomainKind::group_elements;
    hom.base_tag = base_tag;
    hom.exponents.assign(static_cast<size_t>(g.order()), 0);
    for (Int d : model.residues) {
        GroupElement td = g.scalar_mul(d, tr);
        hom.exponents[static_cast<size_t>(g.index_of(td))] = 1;
        hom.exponents[static_cast<size_t>(g.index_of(g.neg(td)))] = 1;
    }
    return hom;
}

bool verify_swan1a(const FinAbGroup& g, const GroupElement& t, const GaloisModel& model) {
    GroupElement tr = g.reduce(t);
    Int n = elem_order(g, tr);
    if (model.modulus != n)
        throw std::invalid_argument("verify_swan1a: model modulus must equal |t|");
    auto chars = character_group(g);
    Subgroup h = subgroup_generated_by(g, {tr});

    // Character-level sum identity: sum over d in D of <chi,d*t> + <chi,-d*t>
    // is 0 when chi(t) = 1 and |D| otherwise.
    for (const auto& chi : chars) {
        Rat acc(0);
        for (Int d : model.residues) {
            GroupElement td = g.scalar_mul(d, tr);
            acc = acc + pairing(chi, td) + pairing(chi, g.neg(td));
        }
        Rat want = chi.kills(tr) ? Rat(0) : Rat(model.size());
        if (acc != want) return false;
    }

    // Transpose identity against the indicator hom.  The multiplier is
    // |D|/2 exactly when -1 lies in D; kept rational so modulus 2, where
    // the half survives, is still checked faithfully.
    Rat mult = model.contains(model.modulus - 1) && model.modulus > 1
                   ? Rat(model.size(), 2)
                   : Rat(model.size());
    MonomialHom ind = c_swan(g, h, "r");
    MonomialHom gv = swan1a_g(g, tr, model, "r");
    IntLattice a_hat = a_hat_lattice(g);
    for (const auto& psi : a_hat.basis) {
        Rat lhs(0);
        for (size_t i = 0; i < psi.size(); ++i)
            lhs = lhs + mult * Rat(ind.exponents[i] * psi[i]);
        Int rhs = theta_transpose_exponent(g, gv.exponents, psi);
        if (lhs != Rat(rhs)) return false;
    }
    return true;
}

bool verify_ccc(const FinAbGroup& g, const GroupElement& t) {
    GroupElement tr = g.reduce(t);
    if (tr == g.identity()) throw std::invalid_argument("verify_ccc: t must not be the identity");
    if (elem_order(g, tr) % 2 == 0)
        throw std::domain_error("verify_ccc: |t| must be odd");
    MonomialHom c2 = c_family(g, tr, 2, "x");
    Subgroup h = subgroup_generated_by(g, {tr});
    MonomialHom ind = c_swan(g, h, "x");
    auto chars = character_group(g);
    for (size_t c = 0; c < chars.size(); ++c) {
        Int cinv = character_index(chars[c].inverse());
        if (c2.exponents[c] + c2.exponents[static_cast<size_t>(cinv)] != ind.exponents[c])
            return false;
    }
    return true;
}

Int delta_of_group(const FinAbGroup& g) {
    Int n = g.order();
    if (n == 1) throw std::domain_error("delta_of_group: group must be nontrivial");
    while (n % 2 == 0) n /= 2;
    return n == 1 ? 2 : 1;
}

Int verify_swan2b_exponent(const FinAbGroup& g, const GroupElement& t, const Character& chi) {
    GroupElement tr = g.reduce(t);
    if (tr == g.identity())
        throw std::invalid_argument("verify_swan2b_exponent: t must not be the identity");
    Int delta = delta_of_group(g);
    if (delta == 1 && elem_order(g, tr) % 2 == 0)
        throw std::domain_error("verify_swan2b_exponent: |t| must be odd when delta = 1");
    if (chi.kills(tr))
        throw std::domain_error("verify_swan2b_exponent: chi(t) must be nontrivial");
    MonomialHom c = c_family(g, tr, delta == 2 ? 1 : 2, "pi");
    Int ci = character_index(chi);
    Int cinv = character_index(chi.inverse());
    return c.exponents[static_cast<size_t>(ci)] + c.exponents[static_cast<size_t>(cinv)];
}

std::vector<MonomialHom> resolvent_exponents(const FinAbGroup& g,
                                             const std::vector<RamificationDatum>& data) {
    std::vector<MonomialHom> out;
    auto chars = character_group(g);
    for (const auto& datum : data) {
        GroupElement s = g.reduce(datum.s_v);
        MonomialHom hom;
        hom.group = g;
        hom.domain_kind = DomainKind::characters;
        hom.base_tag = "pi_" + datum.place_label;
        hom.exponents.resize(chars.size());
        Subgroup h = subgroup_generated_by(g, {s});
        MonomialHom ind = c_swan(g, h, hom.base_tag);
        GroupElement sinv = g.neg(s);
        for (size_t c = 0; c < chars.size(); ++c) {
            Rat e = pairing(chars[c], s) + pairing(chars[c], sinv);
            if (!e.is_integer()) throw std::logic_error("resolvent_exponents: non-integral");
            hom.exponents[c] = e.num;
            if (hom.exponents[c] != ind.exponents[c])
                throw std::logic_error("resolvent_exponents: indicator identity failed");
        }
        out.push_back(std::move(hom));
    }
    return out;
}

}  // namespace galmod
