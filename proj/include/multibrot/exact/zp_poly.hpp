#pragma once

// Polynomials over Z/pZ for word-sized primes p < 2^31. Products of two
// residues fit in 64 bits, so no wide arithmetic is needed.

#include "multibrot/exact/int_poly.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace multibrot::exact::zp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // low degree first, trimmed

inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

inline u64 pow(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("zp::inv of zero");
    return pow(a, p - 2, p);
}

inline u64 reduce(const BigInt& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly from_int(const IntPoly& f, u64 p) {
    Poly a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = reduce(f.coeffs()[i], p);
    trim(a);
    return a;
}

/// Symmetric lift to integers.
inline IntPoly to_int(const Poly& a, u64 p) {
    std::vector<BigInt> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long v = static_cast<long>(a[i]);
        if (a[i] > p / 2) v -= static_cast<long>(p);
        c[i] = v;
    }
    return IntPoly(std::move(c));
}

inline Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, u64 s, u64 p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s % p;
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    // Accumulate a few products before reducing: each product < 2^62.
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const u64 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + ai * b[j]) % p;
    }
    trim(r);
    return r;
}

inline Poly monic(const Poly& a, u64 p) {
    if (a.empty()) return a;
    return scale(a, inv(a.back(), p), p);
}

/// Quotient and remainder; b nonzero.
inline void divrem(const Poly& a, const Poly& b, u64 p, Poly* q, Poly* r) {
    if (b.empty()) throw std::domain_error("zp division by zero");
    Poly rem = a;
    const int n = deg(b);
    if (deg(a) < n) {
        if (q) q->clear();
        if (r) *r = rem;
        return;
    }
    Poly quo(static_cast<std::size_t>(deg(a) - n + 1), 0);
    const u64 il = inv(b.back(), p);
    for (int k = deg(a) - n; k >= 0; --k) {
        u64 t = rem[static_cast<std::size_t>(n + k)] * il % p;
        quo[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        const u64 nt = p - t;
        for (int j = 0; j <= n; ++j) {
            u64& x = rem[static_cast<std::size_t>(j + k)];
            x = (x + nt * b[static_cast<std::size_t>(j)]) % p;
        }
    }
    rem.resize(static_cast<std::size_t>(n));
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
}

inline Poly rem(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    divrem(a, b, p, nullptr, &r);
    return r;
}

inline Poly quo(const Poly& a, const Poly& b, u64 p) {
    Poly q;
    divrem(a, b, p, &q, nullptr);
    return q;
}

/// Monic gcd (zero if both zero).
inline Poly gcd(Poly a, Poly b, u64 p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

/// Returns g = gcd(a, b) monic with s a + t b = g.
inline Poly xgcd(const Poly& a, const Poly& b, u64 p, Poly* s, Poly* t) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        Poly q, r;
        divrem(r0, r1, p, &q, &r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        if (s) *s = {};
        if (t) *t = {};
        return r0;
    }
    u64 il = inv(r0.back(), p);
    if (s) *s = scale(s0, il, p);
    if (t) *t = scale(t0, il, p);
    return scale(r0, il, p);
}

inline Poly derivative(const Poly& a, u64 p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    trim(r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) { return rem(mul(a, b, p), m, p); }

/// base^e mod m.
inline Poly powmod(Poly base, u64 e, const Poly& m, u64 p) {
    Poly r{1};
    r = rem(r, m, p);
    base = rem(base, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        e >>= 1;
        if (e) base = mulmod(base, base, m, p);
    }
    return r;
}

inline u64 eval(const Poly& a, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
    return acc;
}

/// Res(a, b) over Z/pZ by the Euclidean algorithm, with the degrees of
/// the reduced polynomials (callers keep leading coefficients nonzero mod p).
inline u64 resultant(Poly a, Poly b, u64 p) {
    if (a.empty() || b.empty()) return 0;
    u64 acc = 1;
    while (true) {
        int m = deg(a), n = deg(b);
        if (n == 0) return acc * pow(b[0], static_cast<u64>(m), p) % p;
        if (m == 0) return acc * pow(a[0], static_cast<u64>(n), p) % p;
        Poly r = rem(a, b, p);
        if (r.empty()) return 0;
        int k = deg(r);
        // Res(a,b) = (-1)^{mn} lc(b)^{m-k} Res(b, r)
        if ((static_cast<long>(m) * n) % 2) acc = (p - acc) % p;
        acc = acc * pow(b.back(), static_cast<u64>(m - k), p) % p;
        a = std::move(b);
        b = std::move(r);
    }
}


/// Polynomial of degree <= n through (xs[i], ys[i]) (Newton form, O(n^2)).
inline Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    const std::size_t n = xs.size();
    std::vector<u64> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            u64 num = sub(dd[i], dd[i - 1], p);
            u64 den = sub(xs[i], xs[i - j], p);
            dd[i] = num * inv(den, p) % p;
            if (i == j) break;
        }
    // Expand Newton form.
    Poly r{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // r = r * (x - xs[k]) + dd[k]
        Poly t(r.size() + 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            t[i + 1] = add(t[i + 1], r[i], p);
            t[i] = sub(t[i], r[i] * xs[k] % p, p);
        }
        t[0] = add(t[0], dd[k], p);
        r = std::move(t);
    }
    trim(r);
    return r;
}

/// Interpolation through (0, ys[0]), (1, ys[1]), ...; the divided
/// differences only need inverses of 1..n-1.
inline Poly interpolate_consecutive(const std::vector<u64>& ys, u64 p) {
    const std::size_t n = ys.size();
    std::vector<u64> invs(n + 1, 0);
    for (std::size_t k = 1; k < n; ++k) invs[k] = inv(k % p, p);
    std::vector<u64> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = sub(dd[i], dd[i - 1], p) * invs[j] % p;
            if (i == j) break;
        }
    Poly r{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        Poly t(r.size() + 1, 0);
        const u64 xk = k % p;
        for (std::size_t i = 0; i < r.size(); ++i) {
            t[i + 1] = add(t[i + 1], r[i], p);
            t[i] = sub(t[i], r[i] * xk % p, p);
        }
        t[0] = add(t[0], dd[k], p);
        r = std::move(t);
    }
    trim(r);
    return r;
}

/// Distinct-degree factorisation of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree e, e).
inline std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p) {
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    Poly h = {0, 1};  // x
    const Poly x = {0, 1};
    int e = 0;
    while (deg(rest) >= 2 * (e + 1)) {
        ++e;
        h = powmod(h, p, rest, p);
        Poly g = gcd(rest, sub(h, x, p), p);
        if (deg(g) > 0) {
            out.emplace_back(g, e);
            rest = quo(rest, g, p);
            h = rem(h, rest, p);
        }
    }
    if (deg(rest) > 0) out.emplace_back(rest, deg(rest));
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus, odd p) of a monic product of
/// irreducibles of degree e.
inline void equal_degree(const Poly& f, int e, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (deg(f) == e) {
        out.push_back(f);
        return;
    }
    // exponent (p^e - 1)/2 computed as repeated powering to avoid overflow
    while (true) {
        Poly a(static_cast<std::size_t>(deg(f)));
        for (auto& v : a) v = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        Poly g = gcd(f, a, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, e, p, rng, out);
            equal_degree(quo(f, g, p), e, p, rng, out);
            return;
        }
        // b = a^((p^e - 1)/2) mod f
        // (p^e - 1)/2 = (p-1)/2 * (1 + p + ... + p^{e-1})
        Poly t = a;
        Poly acc = a;  // a^{1 + p + ... + p^{i}}
        for (int i = 1; i < e; ++i) {
            t = powmod(t, p, f, p);
            acc = mulmod(acc, t, f, p);
        }
        Poly b = powmod(acc, (p - 1) / 2, f, p);
        Poly bm1 = sub(b, Poly{1}, p);
        g = gcd(f, bm1, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, e, p, rng, out);
            equal_degree(quo(f, g, p), e, p, rng, out);
            return;
        }
    }
}

inline bool is_squarefree(const Poly& f, u64 p) {
    Poly g = gcd(f, derivative(f, p), p);
    return deg(g) == 0;
}

/// Primes below 2^31, descending from the largest.
inline std::vector<u64> large_primes(std::size_t count, u64 below = (u64{1} << 31)) {
    std::vector<u64> out;
    for (u64 q = below - 1; out.size() < count && q > 2; q -= 2) {
        if (q % 2 == 0) --q;
        if (is_prime(BigInt(static_cast<unsigned long>(q)))) out.push_back(q);
    }
    return out;
}

}  // namespace multibrot::exact::zp
