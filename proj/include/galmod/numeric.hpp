#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace galmod {

using Int = std::int64_t;

// Thrown when an enumeration or precision bound is exceeded.  Input and
// domain violations use std::invalid_argument and std::domain_error.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on element enumerations (group orders, residue rings).
inline constexpr Int kEnumBound = 10000;

inline Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

// Extended gcd: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// a mod m reduced into [0, m).  m > 0 required.
inline Int mod_reduce(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int mul_mod(Int a, Int b, Int m) {
    return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

inline Int pow_mod(Int base, Int exp, Int m) {
    if (m == 1) return 0;
    Int b = mod_reduce(base, m), r = 1;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m; throws std::domain_error when gcd(a,m) != 1.
inline Int inv_mod(Int a, Int m) {
    Int x, y;
    Int g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1) throw std::domain_error("inv_mod: argument not invertible");
    return mod_reduce(x, m);
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<Int> primes_up_to(Int bound) {
    std::vector<Int> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (Int p = 2; p <= bound; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (Int q = p * p; q <= bound; q += p) sieve[static_cast<size_t>(q)] = false;
    }
    return out;
}

// Prime factorization by trial division, as (prime, multiplicity) pairs.
inline std::vector<std::pair<Int, Int>> factorize(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, Int>> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        Int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/**
 * Exact rational on 64-bit numerator/denominator, always normalized with
 * den > 0 and gcd(num, den) = 1.  Arithmetic here never leaves the range
 * these computations need (pairing values, index quotients), so no big-int
 * fallback is provided.
 */
struct Rat {
    Int num = 0;
    Int den = 1;

    Rat() = default;
    Rat(Int n) : num(n), den(1) {}
    Rat(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace galmod
