#pragma once

// Factorisation in Z[T]: squarefree decomposition, rational-root stripping,
// deflation of polynomials in T^s, then Cantor-Zassenhaus modulo a small
// prime, multifactor Hensel lifting and Zassenhaus recombination with
// degree-pattern pruning across several primes.

#include "multibrot/exact/resultant.hpp"
#include "multibrot/exact/zp_poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace multibrot::exact {

struct Factorization {
    BigInt unit;  // signed content
    std::vector<std::pair<IntPoly, unsigned>> factors;

    IntPoly expand() const {
        IntPoly r = IntPoly::constant(unit);
        for (const auto& [f, m] : factors) r *= f.pow(m);
        return r;
    }
};

namespace detail {

using MPoly = std::vector<BigInt>;  // residues mod M, low degree first

inline void mtrim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline MPoly mreduce(MPoly a, const BigInt& m) {
    for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    mtrim(a);
    return a;
}

inline MPoly mfrom(const IntPoly& f, const BigInt& m) { return mreduce(f.coeffs(), m); }

inline MPoly mfrom(const zp::Poly& f) {
    MPoly a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = static_cast<unsigned long>(f[i]);
    return a;
}

inline MPoly madd(const MPoly& a, const MPoly& b, const BigInt& m) {
    MPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return mreduce(std::move(r), m);
}

inline MPoly msub(const MPoly& a, const MPoly& b, const BigInt& m) {
    MPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return mreduce(std::move(r), m);
}

inline MPoly mmul(const MPoly& a, const MPoly& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return mreduce(std::move(r), m);
}

inline MPoly mscale(const MPoly& a, const BigInt& s, const BigInt& m) {
    MPoly r = a;
    for (auto& v : r) v *= s;
    return mreduce(std::move(r), m);
}

/// Division by a monic b modulo m.
inline void mdivrem_monic(const MPoly& a, const MPoly& b, const BigInt& m, MPoly* q, MPoly* r) {
    const int n = static_cast<int>(b.size()) - 1;
    MPoly rem = a;
    if (static_cast<int>(a.size()) - 1 < n) {
        if (q) q->clear();
        if (r) *r = rem;
        return;
    }
    const int da = static_cast<int>(a.size()) - 1;
    MPoly quo(static_cast<std::size_t>(da - n + 1));
    for (int k = da - n; k >= 0; --k) {
        BigInt t = rem[static_cast<std::size_t>(n + k)];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        quo[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= n; ++j) mpz_submul(rem[static_cast<std::size_t>(j + k)].get_mpz_t(), t.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
        // keep sizes bounded
        for (int j = 0; j < n; ++j) mpz_fdiv_r(rem[static_cast<std::size_t>(j + k)].get_mpz_t(), rem[static_cast<std::size_t>(j + k)].get_mpz_t(), m.get_mpz_t());
    }
    rem.resize(static_cast<std::size_t>(n));
    if (q) *q = mreduce(std::move(quo), m);
    if (r) *r = mreduce(std::move(rem), m);
}

/// One Hensel step: from f = g h, s g + t h = 1 (mod m) to the same
/// relations modulo `next` (which divides m^2). h stays monic.
inline void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const BigInt& next) {
    MPoly e = msub(mreduce(f, next), mmul(g, h, next), next);
    MPoly q, r;
    mdivrem_monic(mmul(s, e, next), h, next, &q, &r);
    MPoly g2 = madd(g, madd(mmul(t, e, next), mmul(q, g, next), next), next);
    MPoly h2 = madd(h, r, next);
    MPoly b = msub(madd(mmul(s, g2, next), mmul(t, h2, next), next), MPoly{BigInt(1)}, next);
    MPoly c, d;
    mdivrem_monic(mmul(s, b, next), h2, next, &c, &d);
    s = msub(s, d, next);
    t = msub(t, madd(mmul(t, b, next), mmul(c, g2, next), next), next);
    g = std::move(g2);
    h = std::move(h2);
}

/// Lift f = lc(f) * prod(factors) mod p to monic factors mod `target`.
inline std::vector<MPoly> multifactor_lift(const MPoly& f, const std::vector<zp::Poly>& factors, zp::u64 p,
                                           const BigInt& target) {
    if (factors.size() == 1) {
        BigInt lc = f.back(), inv_lc;
        if (mpz_invert(inv_lc.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
            throw std::domain_error("leading coefficient not invertible");
        return {mscale(f, inv_lc, target)};
    }
    const std::size_t half = factors.size() / 2;
    std::vector<zp::Poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<zp::Poly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    zp::Poly L{1}, R{1};
    for (const auto& u : left) L = zp::mul(L, u, p);
    for (const auto& u : right) R = zp::mul(R, u, p);
    const zp::u64 lcp = zp::reduce(f.back(), p);
    zp::Poly g0 = zp::scale(L, lcp, p);
    zp::Poly s0, t0;
    zp::Poly one = zp::xgcd(g0, R, p, &s0, &t0);
    if (zp::deg(one) != 0) throw std::logic_error("Hensel: factors not coprime");

    MPoly g = mfrom(g0), h = mfrom(R), s = mfrom(s0), t = mfrom(t0);
    BigInt m = static_cast<unsigned long>(p);
    while (m < target) {
        BigInt next = m * m;
        if (next > target) next = target;
        hensel_step(f, g, h, s, t, next);
        m = next;
    }
    auto lf = multifactor_lift(g, left, p, target);
    auto rf = multifactor_lift(h, right, p, target);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

inline IntPoly msymmetric(const MPoly& a, const BigInt& m) {
    BigInt half = m / 2;
    std::vector<BigInt> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i];
        mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), m.get_mpz_t());
        if (out[i] > half) out[i] -= m;
    }
    return IntPoly(std::move(out));
}

inline std::vector<bool> subset_degree_sums(const std::vector<int>& degs, int n) {
    std::vector<bool> ok(static_cast<std::size_t>(n + 1), false);
    ok[0] = true;
    for (int d : degs)
        for (int s = n; s >= d; --s)
            if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = true;
    return ok;
}

struct ModularImage {
    zp::u64 p = 0;
    std::vector<std::pair<zp::Poly, int>> ddf;
    std::size_t count = 0;
};

inline const std::vector<zp::u64>& small_odd_primes() {
    static const std::vector<zp::u64> ps = [] {
        std::vector<zp::u64> v;
        for (zp::u64 q = 3; v.size() < 3000; q += 2)
            if (is_prime(BigInt(static_cast<unsigned long>(q)))) v.push_back(q);
        return v;
    }();
    return ps;
}

inline std::vector<IntPoly> zassenhaus(const IntPoly& f_in) {
    const int n = f_in.degree();
    if (n <= 1) return {f_in};

    constexpr std::size_t kPrimes = 7;
    std::vector<ModularImage> images;
    std::vector<bool> allowed(static_cast<std::size_t>(n + 1), true);
    for (zp::u64 p : small_odd_primes()) {
        if (zp::reduce(f_in.lead(), p) == 0) continue;
        zp::Poly fp = zp::monic(zp::from_int(f_in, p), p);
        if (!zp::is_squarefree(fp, p)) continue;
        ModularImage img;
        img.p = p;
        img.ddf = zp::distinct_degree(fp, p);
        std::vector<int> degs;
        for (const auto& [g, e] : img.ddf)
            for (int k = 0; k < zp::deg(g) / e; ++k) degs.push_back(e);
        img.count = degs.size();
        auto sums = subset_degree_sums(degs, n);
        for (int k = 0; k <= n; ++k) allowed[static_cast<std::size_t>(k)] = allowed[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)];
        images.push_back(std::move(img));
        if (images.back().count == 1) return {f_in};
        if (images.size() >= kPrimes) break;
    }
    if (images.empty()) throw std::runtime_error("zassenhaus: no usable prime");
    bool any_proper = false;
    for (int k = 1; k < n; ++k) any_proper = any_proper || allowed[static_cast<std::size_t>(k)];
    if (!any_proper) return {f_in};

    const ModularImage& best = *std::min_element(images.begin(), images.end(),
                                                 [](const auto& a, const auto& b) { return a.count < b.count; });
    const zp::u64 p = best.p;
    std::mt19937_64 rng(0x5eed ^ p);
    std::vector<zp::Poly> modular;
    for (const auto& [g, e] : best.ddf) zp::equal_degree(g, e, p, rng, modular);

    // Lift past 2 |lc| 2^n ||f||_2 so every true factor is recovered.
    BigInt norm2 = 0;
    for (const auto& a : f_in.coeffs()) norm2 += a * a;
    BigInt norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    BigInt bound = abs(f_in.lead()) * norm * (BigInt(1) << static_cast<unsigned long>(n)) * 2 + 1;
    BigInt M = static_cast<unsigned long>(p);
    while (M <= bound) M *= static_cast<unsigned long>(p);

    std::vector<MPoly> lifted = multifactor_lift(mfrom(f_in, M), modular, p, M);
    std::vector<BigInt> const_terms(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) const_terms[i] = lifted[i].empty() ? BigInt(0) : lifted[i][0];
    std::vector<int> degs(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) degs[i] = static_cast<int>(lifted[i].size()) - 1;

    std::vector<IntPoly> found;
    IntPoly f = f_in;
    std::vector<std::size_t> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    const BigInt halfM = M / 2;
    std::size_t s = 1;
    while (2 * s <= alive.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        const BigInt lcf = f.lead();
        const BigInt target0 = lcf * f.trailing();
        while (true) {
            int dsum = 0;
            for (std::size_t k : idx) dsum += degs[alive[k]];
            if (allowed[static_cast<std::size_t>(dsum)]) {
                BigInt c0 = lcf;
                for (std::size_t k : idx) {
                    c0 *= const_terms[alive[k]];
                    mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
                }
                if (c0 > halfM) c0 -= M;
                if (c0 != 0 && divides(c0, target0)) {
                    MPoly prod{lcf};
                    for (std::size_t k : idx) prod = mmul(prod, lifted[alive[k]], M);
                    IntPoly g = msymmetric(prod, M).primitive();
                    IntPoly q;
                    if (g.degree() > 0 && divide_exact(f, g, &q)) {
                        found.push_back(g);
                        f = q;
                        std::vector<std::size_t> rest;
                        for (std::size_t k = 0; k < alive.size(); ++k)
                            if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(alive[k]);
                        alive = std::move(rest);
                        hit = true;
                        break;
                    }
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == alive.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (f.degree() > 0) found.push_back(f.primitive());
    return found;
}

/// Rational roots of f when its end coefficients are small enough to
/// enumerate divisors; returns the linear factors and divides them out.
inline std::vector<IntPoly> strip_rational_roots(IntPoly& f) {
    std::vector<IntPoly> out;
    if (f.degree() < 2) return out;
    if (bit_length(f.trailing()) > 40 || bit_length(f.lead()) > 40) return out;
    auto divisors = [](BigInt x) {
        x = abs(x);
        std::vector<BigInt> ds;
        for (BigInt d = 1; d * d <= x; ++d)
            if (divides(d, x)) {
                ds.push_back(d);
                if (d * d != x) ds.push_back(x / d);
            }
        return ds;
    };
    if (bit_length(f.trailing()) > 32 || bit_length(f.lead()) > 32) return out;
    auto num = divisors(f.trailing());
    auto den = divisors(f.lead());
    for (const auto& u : num)
        for (const auto& v : den) {
            if (gcd(u, v) != 1) continue;
            for (int sg : {1, -1}) {
                if (f.degree() < 1) return out;
                IntPoly lin(std::vector<BigInt>{-sg * u, v});
                IntPoly q;
                while (f.degree() >= 1 && divide_exact(f, lin, &q)) {
                    out.push_back(lin);
                    f = q;
                }
            }
        }
    return out;
}

/// Irreducible factors of a primitive squarefree polynomial.
inline std::vector<IntPoly> factor_squarefree(IntPoly f) {
    std::vector<IntPoly> out;
    f = f.primitive();
    if (f.degree() < 1) return out;
    if (std::size_t k = f.low_order(); k > 0) {
        out.push_back(IntPoly::x());
        f = f.shift_down(k);
    }
    if (f.degree() < 1) return out;
    for (auto& lin : strip_rational_roots(f)) out.push_back(lin.primitive());
    f = f.primitive();
    if (f.degree() < 1) return out;
    if (f.degree() == 1) {
        out.push_back(f);
        return out;
    }
    // deflation: f(T) = G(T^q) for the smallest prime q dividing all exponents
    std::size_t s = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f.coeffs()[i] != 0) s = std::gcd(s, i);
    if (s > 1) {
        std::size_t q = prime_divisors(s).front();
        std::vector<BigInt> g;
        for (std::size_t i = 0; i < f.size(); i += q) g.push_back(f.coeffs()[i]);
        for (const auto& h : factor_squarefree(IntPoly(std::move(g)))) {
            for (auto& piece : zassenhaus(h.inflate(q))) out.push_back(piece.primitive());
        }
        return out;
    }
    for (auto& piece : zassenhaus(f)) out.push_back(piece.primitive());
    return out;
}

}  // namespace detail

/// Complete factorisation over Z: signed content times canonical
/// irreducible factors with multiplicities, sorted by (degree, coefficients).
inline Factorization factor_irreducible(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_irreducible: zero polynomial");
    Factorization out;
    out.unit = p.content();
    if (p.lead() < 0) out.unit = -out.unit;
    if (p.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(p.primitive())) {
        for (auto& f : detail::factor_squarefree(part)) out.factors.emplace_back(f.primitive(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

/// Distinct irreducible factors only (multiplicities dropped).
inline std::vector<IntPoly> irreducible_factors(const IntPoly& p) {
    std::vector<IntPoly> out;
    for (auto& [f, m] : factor_irreducible(p).factors) out.push_back(f);
    return out;
}

}  // namespace multibrot::exact
