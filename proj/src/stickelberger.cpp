#include "galmod/stickelberger.hpp"

namespace galmod {

Int Character::eval_exponent(const GroupElement& s) const {
    GroupElement r = group.reduce(s);
    Int e = group.exponent();
    Int acc = 0;
    for (size_t i = 0; i < r.size(); ++i)
        acc = mod_reduce(acc + mod_reduce(values_exponent[i] * r[i], e), e);
    return acc;
}

Int Character::order() const {
    Int e = group.exponent();
    Int ord = 1;
    for (Int v : values_exponent) ord = lcm_int(ord, e / gcd_int(e, mod_reduce(v, e)));
    return ord;
}

bool Character::is_trivial() const {
    for (Int v : values_exponent)
        if (mod_reduce(v, group.exponent()) != 0) return false;
    return true;
}

bool Character::kills_subgroup(const std::vector<GroupElement>& gens) const {
    for (const auto& h : gens)
        if (!kills(h)) return false;
    return true;
}

Character Character::pow(Int k) const {
    Character c{group, values_exponent};
    Int e = group.exponent();
    for (auto& v : c.values_exponent) v = mod_reduce(mod_reduce(k, e) * v, e);
    return c;
}

Character Character::mul(const Character& other) const {
    if (!(group == other.group))
        throw std::invalid_argument("Character::mul: different groups");
    Character c{group, values_exponent};
    Int e = group.exponent();
    for (size_t i = 0; i < c.values_exponent.size(); ++i)
        c.values_exponent[i] = mod_reduce(c.values_exponent[i] + other.values_exponent[i], e);
    return c;
}

std::vector<Character> character_group(const FinAbGroup& g) {
    Int n = g.order();
    if (n > kEnumBound)
        throw resource_error("character_group: order exceeds enumeration bound");
    Int e = g.exponent();
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(n));
    // chi(g_i) = zeta_e^{(e/d_i) * a_i}; stepping a in mixed radix with the
    // last coordinate fastest gives lexicographic order of exponent vectors.
    for (Int idx = 0; idx < n; ++idx) {
        GroupElement a = g.element_at(idx);
        Character chi;
        chi.group = g;
        chi.values_exponent.resize(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            chi.values_exponent[i] = (e / g.factors[i]) * a[i];
        out.push_back(std::move(chi));
    }
    return out;
}

Int character_index(const Character& chi) {
    const FinAbGroup& g = chi.group;
    Int e = g.exponent();
    GroupElement a(chi.values_exponent.size());
    for (size_t i = 0; i < a.size(); ++i)
        a[i] = mod_reduce(chi.values_exponent[i], e) / (e / g.factors[i]);
    return g.index_of(a);
}

GaloisModel::GaloisModel(Int modulus_, const std::vector<Int>& generators) {
    if (modulus_ < 1) throw std::invalid_argument("GaloisModel: modulus must be >= 1");
    modulus = modulus_;
    std::set<Int> d = {mod_reduce(1, modulus)};
    for (Int g : generators) {
        Int r = mod_reduce(g, modulus);
        if (modulus > 1 && gcd_int(r, modulus) != 1)
            throw std::invalid_argument("GaloisModel: generator not coprime to modulus");
        d.insert(r);
    }
    // Close under multiplication.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Int> cur(d.begin(), d.end());
        for (Int a : cur)
            for (Int b : cur)
                if (d.insert(mul_mod(a, b, modulus == 1 ? 1 : modulus)).second) grew = true;
    }
    residues = std::move(d);
}

GaloisModel GaloisModel::trivial(Int modulus) { return GaloisModel(modulus, {}); }

GaloisModel GaloisModel::full(Int modulus) {
    std::vector<Int> gens;
    for (Int r = 1; r < modulus; ++r)
        if (gcd_int(r, modulus) == 1) gens.push_back(r);
    if (modulus == 1) gens = {};
    return GaloisModel(modulus, gens);
}

Rat pairing(const Character& chi, const GroupElement& s) {
    Int ord = elem_order(chi.group, s);
    Int e = chi.group.exponent();
    Int a = chi.eval_exponent(s);
    // chi(s)^|s| = 1 forces e/|s| to divide a.
    Int step = e / ord;
    if (a % step != 0) throw std::logic_error("pairing: exponent not divisible by e/|s|");
    return Rat(a / step, ord);
}

RationalGroupVector theta(const FinAbGroup& g, const std::vector<Int>& psi) {
    auto chars = character_group(g);
    if (psi.size() != chars.size())
        throw std::invalid_argument("theta: psi has wrong dimension");
    RationalGroupVector out;
    out.group = g;
    Int n = g.order();
    out.coeffs.assign(static_cast<size_t>(n), Rat(0));
    for (Int i = 0; i < n; ++i) {
        GroupElement s = g.element_at(i);
        Rat acc(0);
        for (size_t c = 0; c < chars.size(); ++c) {
            if (psi[c] == 0) continue;
            acc = acc + Rat(psi[c]) * pairing(chars[c], s);
        }
        out.coeffs[static_cast<size_t>(i)] = acc;
    }
    return out;
}

IntLattice a_hat_lattice(const FinAbGroup& g) {
    Int n = g.order();
    if (n > kEnumBound)
        throw resource_error("a_hat_lattice: order exceeds enumeration bound");
    Int e = g.exponent();
    auto chars = character_group(g);
    // Row chi, column s: e * <chi, s>.  Theta(psi) is integral iff
    // psi * M = 0 mod e.
    IntMat m(chars.size(), std::vector<Int>(static_cast<size_t>(n), 0));
    for (size_t c = 0; c < chars.size(); ++c)
        for (Int i = 0; i < n; ++i) {
            Rat p = pairing(chars[c], g.element_at(i));
            m[c][static_cast<size_t>(i)] = p.num * (e / p.den);
        }
    return congruence_kernel(m, static_cast<int>(n), e);
}

Int theta_transpose_exponent(const FinAbGroup& g, const std::vector<Int>& exponents,
                             const std::vector<Int>& psi) {
    RationalGroupVector th = theta(g, psi);
    Int n = g.order();
    if (exponents.size() != static_cast<size_t>(n))
        throw std::invalid_argument("theta_transpose_exponent: wrong exponent dimension");
    Rat acc(0);
    for (Int i = 0; i < n; ++i) {
        const Rat& c = th.coeffs[static_cast<size_t>(i)];
        if (!c.is_integer())
            throw std::domain_error("theta_transpose_exponent: psi not in the integrality lattice");
        acc = acc + Rat(exponents[static_cast<size_t>(i)]) * c;
    }
    return acc.num;  // integral by the check above
}

bool is_equivariant(const FinAbGroup& g, const std::vector<Int>& exponents,
                    bool domain_on_characters, const GaloisModel& model) {
    Int n = g.order();
    if (exponents.size() != static_cast<size_t>(n))
        throw std::invalid_argument("is_equivariant: wrong exponent dimension");
    if (domain_on_characters) {
        auto chars = character_group(g);
        for (size_t c = 0; c < chars.size(); ++c) {
            if (chars[c].order() != 1 && model.modulus % chars[c].order() != 0) continue;
            for (Int d : model.residues) {
                Int j = character_index(chars[c].pow(d));
                if (exponents[c] != exponents[static_cast<size_t>(j)]) return false;
            }
        }
    } else {
        for (Int i = 0; i < n; ++i) {
            GroupElement s = g.element_at(i);
            Int ord = elem_order(g, s);
            if (ord != 1 && model.modulus % ord != 0) continue;
            for (Int d : model.residues) {
                Int j = g.index_of(g.scalar_mul(d, s));
                if (exponents[static_cast<size_t>(i)] != exponents[static_cast<size_t>(j)])
                    return false;
            }
        }
    }
    return true;
}

Int d_n_of_model(const GaloisModel& model) {
    if (model.modulus > 2 && model.contains(model.modulus - 1))
        return model.size() / 2;
    return model.size();
}

}  // namespace galmod
