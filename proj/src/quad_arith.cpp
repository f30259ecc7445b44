#include "galmod/quad_arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "galmod/matrix.hpp"

namespace galmod {

namespace {

Int isqrt_floor(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void require_odd_prime(Int p) {
    if (p == 2) throw std::invalid_argument("p = 2 is not supported");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

// Residues a + b*w mod p; w^2 = tr*w - nrm.
struct ResidueCtx {
    Int p;
    Int tr;
    Int nrm;
};

using Res = std::pair<Int, Int>;

Res res_one() { return {1, 0}; }

Res res_mul(const ResidueCtx& c, const Res& x, const Res& y) {
    Int ac = mul_mod(x.first, y.first, c.p);
    Int bd = mul_mod(x.second, y.second, c.p);
    Int cross = (mul_mod(x.first, y.second, c.p) + mul_mod(x.second, y.first, c.p)) % c.p;
    Int re = mod_reduce(ac - mul_mod(bd, c.nrm, c.p), c.p);
    Int im = mod_reduce(cross + mul_mod(bd, c.tr, c.p), c.p);
    return {re, im};
}

Res res_pow(const ResidueCtx& c, Res base, Int e) {
    Res acc = res_one();
    while (e > 0) {
        if (e & 1) acc = res_mul(c, acc, base);
        base = res_mul(c, base, base);
        e >>= 1;
    }
    return acc;
}

bool res_is_unit(const ResidueCtx& c, const Res& x) {
    Int n = (mul_mod(x.first, x.first, c.p) + mul_mod(mul_mod(x.first, x.second, c.p), c.tr, c.p) +
             mul_mod(mul_mod(x.second, x.second, c.p), c.nrm, c.p)) %
            c.p;
    return n != 0;
}

// Order of x in a group of order n with known factorization of n.
Int res_order_f(const ResidueCtx& c, const Res& x, Int n,
                const std::vector<std::pair<Int, Int>>& fact) {
    Int ord = n;
    for (const auto& [q, e] : fact) {
        (void)e;
        while (ord % q == 0 && res_pow(c, x, ord / q) == res_one()) ord /= q;
    }
    return ord;
}

Int res_order(const ResidueCtx& c, const Res& x, Int n) {
    return res_order_f(c, x, n, factorize(n));
}

Int primitive_root(Int p) {
    auto fact = factorize(p - 1);
    for (Int g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fact) {
            (void)e;
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// Subgroup of (O_K/p)^x generated by gens, by closure.
std::vector<Res> subgroup_closure(const ResidueCtx& c, const std::vector<Res>& gens) {
    std::vector<char> seen(static_cast<size_t>(c.p) * static_cast<size_t>(c.p), 0);
    std::vector<Res> out;
    std::vector<Res> work{res_one()};
    seen[static_cast<size_t>(1) * static_cast<size_t>(c.p)] = 1;
    while (!work.empty()) {
        Res x = work.back();
        work.pop_back();
        out.push_back(x);
        for (const Res& g : gens) {
            Res y = res_mul(c, x, g);
            size_t key = static_cast<size_t>(y.first) * static_cast<size_t>(c.p) +
                         static_cast<size_t>(y.second);
            if (!seen[key]) {
                seen[key] = 1;
                work.push_back(y);
            }
        }
    }
    return out;
}

// Invariant factors of a finite abelian group from the multiset of its
// element orders: per prime q the counts #{x : x^(q^j) = 1} = q^(e_j)
// determine the conjugate of the exponent partition.
std::vector<Int> invariant_factors_from_orders(const std::vector<Int>& orders) {
    Int n = static_cast<Int>(orders.size());
    if (n == 1) return {};
    std::vector<std::vector<Int>> per_prime;
    for (const auto& [q, emax] : factorize(n)) {
        std::vector<Int> b;
        Int prev_e = 0;
        Int qj = 1;
        for (Int j = 1; j <= emax; ++j) {
            qj *= q;
            Int cnt = 0;
            for (Int o : orders)
                if (qj % o == 0) ++cnt;
            Int e = 0;
            Int c = cnt;
            while (c % q == 0) {
                c /= q;
                ++e;
            }
            if (c != 1) throw std::logic_error("order profile is not a prime power count");
            if (e == prev_e) break;
            b.push_back(e - prev_e);
            prev_e = e;
        }
        // conjugate partition of b gives the q-exponents, descending
        std::vector<Int> a;
        Int rows = b.empty() ? 0 : b[0];
        for (Int i = 1; i <= rows; ++i) {
            Int cnt = 0;
            for (Int bj : b)
                if (bj >= i) ++cnt;
            a.push_back(cnt);
        }
        per_prime.push_back(a);
    }
    size_t rank = 0;
    for (const auto& a : per_prime) rank = std::max(rank, a.size());
    std::vector<Int> chain;
    for (size_t i = 0; i < rank; ++i) {
        Int d = 1;
        size_t pi = 0;
        for (const auto& [q, emax] : factorize(n)) {
            (void)emax;
            const auto& a = per_prime[pi++];
            if (i < a.size()) {
                for (Int t = 0; t < a[i]; ++t) d *= q;
            }
        }
        chain.push_back(d);
    }
    std::reverse(chain.begin(), chain.end());
    Int prod = 1;
    for (Int d : chain) prod *= d;
    if (prod != n) throw std::logic_error("invariant factor product mismatch");
    return chain;
}

std::vector<Int> nontrivial_chain(const std::vector<Int>& diag) {
    std::vector<Int> out;
    for (Int d : diag) {
        if (d == 0) throw std::logic_error("degenerate relation lattice");
        if (d > 1) out.push_back(d);
    }
    return out;
}

constexpr Int kVpFieldBound = 2000;
constexpr Int kVpRamifiedBound = 500;
constexpr Int kSearchBound = 1000000;

}  // namespace

QuadField::QuadField(Int d_in) {
    if (d_in == 0 || d_in == 1) throw std::invalid_argument("D must be squarefree and not 0 or 1");
    Int ad = d_in < 0 ? -d_in : d_in;
    for (const auto& [q, e] : factorize(ad)) {
        (void)q;
        if (e > 1) throw std::invalid_argument("D must be squarefree");
    }
    d = d_in;
    half_basis = mod_reduce(d, 4) == 1;
    if (half_basis) {
        disc = d;
        omega_trace = 1;
        omega_norm = (1 - d) / 4;
    } else {
        disc = 4 * d;
        omega_trace = 0;
        omega_norm = -d;
    }
}

Int quad_norm(const QuadField& k, const QuadInt& u) {
    return u.a * u.a + u.a * u.b * k.omega_trace + u.b * u.b * k.omega_norm;
}

std::string quad_str(const QuadField& k, const QuadInt& u) {
    std::string w = k.half_basis ? "(1+sqrt(" + std::to_string(k.d) + "))/2"
                                 : "sqrt(" + std::to_string(k.d) + ")";
    if (u.b == 0) return std::to_string(u.a);
    std::string head = u.a == 0 ? "" : std::to_string(u.a) + (u.b < 0 ? "" : "+");
    if (u.b == 1) return head + w;
    if (u.b == -1) return head + "-" + w;
    return head + std::to_string(u.b) + "*" + w;
}

const char* splitting_name(SplittingType t) {
    switch (t) {
        case SplittingType::split: return "split";
        case SplittingType::inert: return "inert";
        default: return "ramified";
    }
}

Int legendre(Int a, Int p) {
    require_odd_prime(p);
    Int r = mod_reduce(a, p);
    if (r == 0) return 0;
    Int e = pow_mod(r, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::logic_error("Euler criterion returned a nonsquare root of 1");
}

bool p_mod8_criterion(Int p) {
    require_odd_prime(p);
    bool direct = mod_reduce(p, 8) == 7;
    bool via_symbols = legendre(-1, p) == -1 && legendre(2, p) == 1;
    if (direct != via_symbols) throw std::logic_error("mod 8 criterion disagrees with symbols");
    return direct;
}

SplittingType splitting_type(const QuadField& k, Int p) {
    require_odd_prime(p);
    if (mod_reduce(k.disc, p) == 0) return SplittingType::ramified;
    return legendre(k.disc, p) == 1 ? SplittingType::split : SplittingType::inert;
}

FundamentalUnit fundamental_unit(const QuadField& k) {
    if (k.d <= 0) throw std::domain_error("fundamental unit requires a real field");
    Int sq = isqrt_floor(k.d);
    // continued fraction of w as (P + sqrt(d))/Q
    Int P = k.half_basis ? 1 : 0;
    Int Q = k.half_basis ? 2 : 1;
    Int p_prev2 = 0, p_prev1 = 1;
    Int q_prev2 = 1, q_prev1 = 0;
    for (int step = 0; step < 4096; ++step) {
        if (Q <= 0) throw std::logic_error("continued fraction state degenerated");
        Int a = (P + sq) / Q;
        Int pk = a * p_prev1 + p_prev2;
        Int qk = a * q_prev1 + q_prev2;
        if (pk > (Int(1) << 40) || qk > (Int(1) << 40))
            throw resource_error("fundamental unit exceeds the supported range");
        QuadInt u{pk - qk * k.omega_trace, qk};
        Int nrm = quad_norm(k, u);
        if (nrm == 1 || nrm == -1) return {u, nrm};
        p_prev2 = p_prev1;
        p_prev1 = pk;
        q_prev2 = q_prev1;
        q_prev1 = qk;
        P = a * Q - P;
        Q = (k.d - P * P) / Q;
    }
    throw resource_error("continued fraction period exceeds the supported range");
}

VpResult vp_structure(const QuadField& k, Int p) {
    SplittingType st = splitting_type(k, p);
    if (p > (st == SplittingType::ramified ? kVpRamifiedBound : kVpFieldBound))
        throw resource_error("p exceeds the residue enumeration bound");

    ResidueCtx ctx{p, mod_reduce(k.omega_trace, p), mod_reduce(k.omega_norm, p)};

    std::vector<Res> unit_imgs;
    unit_imgs.push_back({p - 1, 0});
    if (k.d == -1 || k.d == -3) {
        unit_imgs.push_back({0, 1});
    } else if (k.d > 0) {
        FundamentalUnit fu = fundamental_unit(k);
        unit_imgs.push_back({mod_reduce(fu.u.a, p), mod_reduce(fu.u.b, p)});
    }
    for (const Res& u : unit_imgs)
        if (!res_is_unit(ctx, u)) throw std::logic_error("global unit maps to a nonunit");

    VpResult out;
    out.p = p;
    out.splitting = st;

    std::vector<Res> w = subgroup_closure(ctx, unit_imgs);
    out.unit_image_order = static_cast<Int>(w.size());

    if (st == SplittingType::split) {
        out.full_order = (p - 1) * (p - 1);
        out.full_factors = {p - 1, p - 1};
        // roots of x^2 - tr*x + nrm, distinct mod p
        std::vector<Int> roots;
        for (Int r = 0; r < p && roots.size() < 2; ++r) {
            if (mod_reduce(r * r - ctx.tr * r + ctx.nrm, p) == 0) roots.push_back(r);
        }
        if (roots.size() != 2) throw std::logic_error("split prime without two roots");
        Int g = primitive_root(p);
        std::vector<Int> dlog(static_cast<size_t>(p), -1);
        Int acc = 1;
        for (Int i = 0; i < p - 1; ++i) {
            dlog[static_cast<size_t>(acc)] = i;
            acc = mul_mod(acc, g, p);
        }
        IntMat rows = {{p - 1, 0}, {0, p - 1}};
        for (const Res& u : unit_imgs) {
            Int x1 = mod_reduce(u.first + u.second * roots[0], p);
            Int x2 = mod_reduce(u.first + u.second * roots[1], p);
            rows.push_back({dlog[static_cast<size_t>(x1)], dlog[static_cast<size_t>(x2)]});
        }
        auto diag = snf_diagonal(rows);
        out.vp_factors = nontrivial_chain(diag);
    } else if (st == SplittingType::inert) {
        Int n = p * p - 1;
        out.full_order = n;
        out.full_factors = {n};
        Res gen{0, 0};
        bool found = false;
        for (Int a = 0; a < p && !found; ++a)
            for (Int b = 0; b < p && !found; ++b) {
                Res cand{a, b};
                if (!res_is_unit(ctx, cand)) continue;
                if (res_order(ctx, cand, n) == n) {
                    gen = cand;
                    found = true;
                }
            }
        if (!found) throw std::logic_error("no generator of the inert residue field");
        std::vector<Int> dlog(static_cast<size_t>(p) * static_cast<size_t>(p), -1);
        Res acc = res_one();
        for (Int i = 0; i < n; ++i) {
            dlog[static_cast<size_t>(acc.first) * static_cast<size_t>(p) +
                 static_cast<size_t>(acc.second)] = i;
            acc = res_mul(ctx, acc, gen);
        }
        IntMat rows = {{n}};
        for (const Res& u : unit_imgs)
            rows.push_back({dlog[static_cast<size_t>(u.first) * static_cast<size_t>(p) +
                                 static_cast<size_t>(u.second)]});
        auto diag = snf_diagonal(rows);
        out.vp_factors = nontrivial_chain(diag);
    } else {
        std::vector<Res> units;
        for (Int a = 0; a < p; ++a)
            for (Int b = 0; b < p; ++b)
                if (res_is_unit(ctx, {a, b})) units.push_back({a, b});
        Int n = static_cast<Int>(units.size());
        out.full_order = n;
        auto nf = factorize(n);
        std::vector<Int> full_orders;
        full_orders.reserve(units.size());
        for (const Res& u : units) full_orders.push_back(res_order_f(ctx, u, n, nf));
        out.full_factors = invariant_factors_from_orders(full_orders);

        std::vector<char> in_w(static_cast<size_t>(p) * static_cast<size_t>(p), 0);
        for (const Res& x : w)
            in_w[static_cast<size_t>(x.first) * static_cast<size_t>(p) +
                 static_cast<size_t>(x.second)] = 1;
        std::vector<char> marked(static_cast<size_t>(p) * static_cast<size_t>(p), 0);
        std::vector<Int> coset_orders;
        for (const Res& u : units) {
            size_t key = static_cast<size_t>(u.first) * static_cast<size_t>(p) +
                         static_cast<size_t>(u.second);
            if (marked[key]) continue;
            for (const Res& x : w) {
                Res y = res_mul(ctx, u, x);
                marked[static_cast<size_t>(y.first) * static_cast<size_t>(p) +
                       static_cast<size_t>(y.second)] = 1;
            }
            // order of the coset: least divisor d of ord(u) with u^d in W
            Int ou = res_order_f(ctx, u, n, nf);
            Int best = ou;
            std::vector<Int> divs;
            for (Int d = 1; d * d <= ou; ++d)
                if (ou % d == 0) {
                    divs.push_back(d);
                    if (d != ou / d) divs.push_back(ou / d);
                }
            std::sort(divs.begin(), divs.end());
            for (Int d : divs) {
                Res y = res_pow(ctx, u, d);
                if (in_w[static_cast<size_t>(y.first) * static_cast<size_t>(p) +
                         static_cast<size_t>(y.second)]) {
                    best = d;
                    break;
                }
            }
            coset_orders.push_back(best);
        }
        out.vp_factors = invariant_factors_from_orders(coset_orders);
    }

    out.vp_order = 1;
    for (Int d : out.vp_factors) out.vp_order *= d;
    if (out.vp_order * out.unit_image_order != out.full_order)
        throw std::logic_error("quotient order does not match the unit image index");
    out.has_order_four = !out.vp_factors.empty() && out.vp_factors.back() % 4 == 0;
    return out;
}

RemarkReport remark_check(const QuadField& k, Int p) {
    if (k.d <= 0) throw std::domain_error("a real field is required");
    FundamentalUnit fu = fundamental_unit(k);
    if (fu.norm != -1) throw std::domain_error("the fundamental unit must have norm -1");
    require_odd_prime(p);
    if (splitting_type(k, p) != SplittingType::inert) throw std::domain_error("p must be inert");
    if (mod_reduce(p, 4) != 3) throw std::domain_error("p must be 3 mod 4");

    ResidueCtx ctx{p, mod_reduce(k.omega_trace, p), mod_reduce(k.omega_norm, p)};
    Res eps{mod_reduce(fu.u.a, p), mod_reduce(fu.u.b, p)};

    RemarkReport rep;
    rep.p = p;
    rep.eps_power_is_minus_one = res_pow(ctx, eps, p + 1) == Res{p - 1, 0};
    Int n = p * p - 1;
    rep.n_p = res_order(ctx, eps, n);
    rep.first_quotient = Rat(2 * (p + 1), rep.n_p);
    rep.first_quotient_odd_integer =
        rep.first_quotient.is_integer() && mod_reduce(rep.first_quotient.num, 2) == 1;
    rep.vp_order = n / rep.n_p;
    rep.vp_order_odd = mod_reduce(rep.vp_order, 2) == 1;
    rep.pass = rep.eps_power_is_minus_one && rep.first_quotient_odd_integer && rep.vp_order_odd;
    return rep;
}

ChevalleyResult chevalley(const ChevalleyInput& in) {
    if (in.h_k < 1) throw std::invalid_argument("class number must be positive");
    if (in.degree < 1) throw std::invalid_argument("degree must be positive");
    if (in.norm_index < 1) throw std::invalid_argument("norm index must be positive");
    if (in.r < 0) throw std::invalid_argument("r must be nonnegative");
    if (in.r > 60) throw resource_error("r exceeds the supported range");
    Rat v(in.h_k);
    v = v * Rat(Int(1) << in.r);
    for (Int e : in.e_list) {
        if (e < 1) throw std::invalid_argument("ramification indices must be positive");
        v = v * Rat(e);
    }
    v = v / Rat(in.norm_index);
    v = v / Rat(in.degree);
    return {v, v.is_integer()};
}

Lem3Bound lem3_bound(Int r1, Int r2, Int n0, Int p) {
    require_odd_prime(p);
    if (r1 < 0 || r2 < 0) throw std::invalid_argument("r1, r2 must be nonnegative");
    if (r1 > 60 || r2 > 30) throw resource_error("exponent exceeds the supported range");
    if (n0 < 1 || (p - 1) % n0 != 0) throw std::invalid_argument("n0 must divide p - 1");
    Rat v(Int(1) << r1);
    for (Int i = 0; i < r2; ++i) v = v * Rat(p - 1);
    v = v / Rat(n0);
    Lem3Bound out;
    out.value = v;
    out.is_even = v.is_integer() && mod_reduce(v.num, 2) == 0;
    // r2 = 0 means a totally real field, which forces n0 = 2.
    out.hypotheses_ok = r1 >= 1 && (r2 >= 1 || (r1 >= 2 && n0 == 2));
    return out;
}

KobayashiCandidates kobayashi_swan(Int d, Int p) {
    if (d >= 0) throw std::invalid_argument("D must be negative");
    if (d == -1 || d == -3) throw std::invalid_argument("D in {-1, -3} is not supported");
    QuadField k(d);
    require_odd_prime(p);
    if (mod_reduce(d, p) == 0) throw std::invalid_argument("p must not divide D");
    KobayashiCandidates out;
    out.symbol = legendre(d, p);
    if (out.symbol == -1)
        out.cyclic_orders = {(p + 1) / 2, p + 1};
    else
        out.cyclic_orders = {(p - 1) / 2, p - 1};
    return out;
}

std::vector<Int> explicit_prime_search(Int m, Int bound) {
    if (m < 3) throw std::invalid_argument("the conductor must be at least 3");
    if (bound > kSearchBound) throw resource_error("bound exceeds the sieve range");
    std::vector<Int> out;
    if (bound < 2) return out;
    for (Int p : primes_up_to(bound)) {
        if (mod_reduce(p, 8) != 7) continue;
        if (mod_reduce(p, 2 * m) != 2 * m - 1) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<SearchWitness> explicit_prime_search_witnessed(const QuadField& k, Int bound) {
    if (k.d >= 0) throw std::invalid_argument("an imaginary field is required");
    std::vector<SearchWitness> out;
    for (Int p : explicit_prime_search(k.conductor(), bound))
        out.push_back({p, vp_structure(k, p).has_order_four});
    return out;
}

bool example_deduction(Int d, Int p) {
    if (d >= 0) throw std::invalid_argument("D must be negative");
    if (d == -1) throw std::invalid_argument("D = -1 is handled separately");
    QuadField k(d);
    require_odd_prime(p);
    Int m = k.conductor();
    if (mod_reduce(p, 8) != 7 || mod_reduce(p, 2 * m) != 2 * m - 1)
        throw std::domain_error("p does not satisfy the search congruences");
    bool ok = legendre(-1, p) == -1;
    for (const auto& [q, e] : factorize(-d)) {
        (void)e;
        if (legendre(q, p) != 1) ok = false;
    }
    return ok && legendre(d, p) == -1;
}

}  // namespace galmod
