#pragma once

#include "multibrot/exact/int_poly.hpp"
#include "multibrot/exact/zp_poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace multibrot::exact {

/// Res(P, Q) = lc(P)^deg Q * prod Q(roots of P), by the subresultant PRS.
inline BigInt resultant(const IntPoly& p_in, const IntPoly& q_in) {
    if (p_in.is_zero() || q_in.is_zero()) throw std::domain_error("undefined resultant");
    if (p_in.degree() == 0) return pow(p_in.lead(), static_cast<unsigned long>(q_in.degree()));
    if (q_in.degree() == 0) return pow(q_in.lead(), static_cast<unsigned long>(p_in.degree()));

    IntPoly a = p_in, b = q_in;
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 && b.degree() % 2) s = -1;
    }
    BigInt ca = a.content(), cb = b.content();
    BigInt t = pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
    {
        std::vector<BigInt> av = a.coeffs(), bv = b.coeffs();
        for (auto& v : av) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ca.get_mpz_t());
        for (auto& v : bv) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cb.get_mpz_t());
        a = IntPoly(std::move(av));
        b = IntPoly(std::move(bv));
    }
    BigInt g = 1, h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 && b.degree() % 2) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = b;
        if (r.is_zero()) return 0;
        BigInt divisor = g * pow(h, static_cast<unsigned long>(delta));
        std::vector<BigInt> rv = r.coeffs();
        for (auto& v : rv) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
        b = IntPoly(std::move(rv));
        g = a.lead();
        // h <- g^delta / h^(delta - 1)
        if (delta == 0) {
            // h^1 * g^0
        } else {
            BigInt num = pow(g, static_cast<unsigned long>(delta));
            BigInt den = pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0) {
            const int da = a.degree();
            BigInt num = pow(b.lead(), static_cast<unsigned long>(da));
            BigInt den = pow(h, static_cast<unsigned long>(da - 1));
            BigInt hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * hh;
        }
    }
}

/// Delta(P) = (-1)^(n(n-1)/2) Res(P, P') / a_n.
inline BigInt discriminant(const IntPoly& p) {
    if (p.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    if (p.degree() == 1) return 1;
    const long n = p.degree();
    BigInt r = resultant(p, p.derivative());
    BigInt out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.lead().get_mpz_t());
    if ((n * (n - 1) / 2) % 2) out = -out;
    return out;
}

namespace detail {

/// x = a mod m, x = b mod p  ->  x mod m p (non-negative residues).
inline void crt_step(std::vector<BigInt>& acc, const BigInt& modulus, const zp::Poly& residues, zp::u64 p) {
    const zp::u64 minv = zp::inv(zp::reduce(modulus, p), p);
    if (acc.size() < residues.size()) acc.resize(residues.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        zp::u64 r = i < residues.size() ? residues[i] : 0;
        zp::u64 cur = zp::reduce(acc[i], p);
        zp::u64 k = zp::sub(r, cur, p) * minv % p;
        acc[i] += modulus * static_cast<unsigned long>(k);
    }
}

inline IntPoly symmetric(const std::vector<BigInt>& acc, const BigInt& modulus) {
    BigInt half = modulus / 2;
    std::vector<BigInt> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        out[i] = acc[i] % modulus;
        if (out[i] < 0) out[i] += modulus;
        if (out[i] > half) out[i] -= modulus;
    }
    return IntPoly(std::move(out));
}

}  // namespace detail

/// gcd over Z, normalised to a primitive polynomial with positive leading
/// coefficient times the gcd of the contents. Modular with exact-division
/// verification.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : IntPoly::constant(b.content()) * b.primitive();
    if (b.is_zero()) return IntPoly::constant(a.content()) * a.primitive();
    const BigInt cont = gcd(a.content(), b.content());
    IntPoly ap = a.primitive(), bp = b.primitive();
    if (ap.degree() == 0 || bp.degree() == 0) return IntPoly::constant(cont);
    if (ap.degree() < bp.degree()) std::swap(ap, bp);
    IntPoly q;
    if (divide_exact(ap, bp, &q)) return IntPoly::constant(cont) * bp;

    const BigInt gamma = gcd(ap.lead(), bp.lead());
    static const std::vector<zp::u64> primes = zp::large_primes(4000);
    int best_deg = bp.degree() + 1;
    std::vector<BigInt> acc;
    BigInt modulus = 1;
    IntPoly previous;
    for (zp::u64 p : primes) {
        if (zp::reduce(ap.lead(), p) == 0 || zp::reduce(bp.lead(), p) == 0) continue;
        zp::Poly g = zp::gcd(zp::from_int(ap, p), zp::from_int(bp, p), p);
        int dg = zp::deg(g);
        if (dg == 0) return IntPoly::constant(cont);
        if (dg > best_deg) continue;
        g = zp::scale(g, zp::reduce(gamma, p), p);
        if (dg < best_deg) {
            best_deg = dg;
            acc.assign(g.begin(), g.end());
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = static_cast<unsigned long>(g[i]);
            modulus = static_cast<unsigned long>(p);
            previous = IntPoly{};
            continue;
        }
        detail::crt_step(acc, modulus, g, p);
        modulus *= static_cast<unsigned long>(p);
        IntPoly cand = detail::symmetric(acc, modulus);
        if (cand == previous) {
            IntPoly h = cand.primitive();
            if (divide_exact(ap, h, nullptr) && divide_exact(bp, h, nullptr)) return IntPoly::constant(cont) * h;
        }
        previous = std::move(cand);
    }
    throw std::runtime_error("gcd: ran out of primes");
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p.primitive();
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    return divide_primitive(p, g);
}

/// Musser's squarefree decomposition: pairs (primitive squarefree factor,
/// multiplicity) with pairwise coprime factors, ignoring the content.
inline std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (p.degree() < 1) return out;
    IntPoly a = gcd(p, p.derivative()).primitive();
    IntPoly b = divide_primitive(p, a);
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly c = gcd(a, b).primitive();
        IntPoly part = divide_primitive(b, c);
        if (part.degree() > 0) out.emplace_back(part, i);
        a = divide_primitive(a, c);
        b = c;
        ++i;
    }
    return out;
}

}  // namespace multibrot::exact
