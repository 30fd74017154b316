#pragma once

// Parabolic parameters of z^d + c with real multiplier +1 or -1: eliminate
// the cycle point by a resultant in z, factor the result over Q, sort the
// factors by the least period of the cycle they carry, and cross-check
// every root numerically.

#include "multibrot/algebraic/algebraic.hpp"
#include "multibrot/exact/factor.hpp"
#include "multibrot/exact/json.hpp"
#include "multibrot/exact/resultant.hpp"
#include "multibrot/exact/zp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace multibrot::parabolic {

using algebraic::AlgebraicNumber;
using exact::BigInt;
using exact::IntPoly;
using exact::Json;
using exact::Rational;
namespace zp = exact::zp;

/// Raised when d^n exceeds the desk-scale cap.
class InstanceTooLarge : public std::length_error {
public:
    InstanceTooLarge() : std::length_error("instance too large") {}
};

constexpr unsigned long cycle_degree_cap = 100;

inline void check_instance(unsigned d, unsigned n) {
    if (d < 2) throw std::invalid_argument("degree d must be >= 2");
    if (n < 1) throw std::invalid_argument("period n must be >= 1");
    unsigned long v = 1;
    for (unsigned k = 0; k < n; ++k) {
        v *= d;
        if (v > cycle_degree_cap) throw InstanceTooLarge();
    }
}

inline void check_lambda(int lambda) {
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("multiplier lambda must be +1 or -1");
}

namespace detail {

using zp::u64;

/// f_c^m(z) with integer c.
inline IntPoly iterate(unsigned d, unsigned m, const BigInt& c) {
    IntPoly f = IntPoly::x();
    for (unsigned k = 0; k < m; ++k) f = f.pow(d) + IntPoly::constant(c);
    return f;
}

inline zp::Poly pow_mod(const zp::Poly& a, unsigned k, u64 p) {
    zp::Poly r{1}, b = a;
    while (k) {
        if (k & 1) r = zp::mul(r, b, p);
        k >>= 1;
        if (k) b = zp::mul(b, b, p);
    }
    return r;
}

/// Res_z(f^m(z) - z, ((f^m)'(z))^k - lambda) mod p at c.
inline u64 eliminate_mod(unsigned d, unsigned m, unsigned k, int lambda, u64 c, u64 p) {
    zp::Poly f{0, 1};
    for (unsigned j = 0; j < m; ++j) {
        f = pow_mod(f, d, p);
        f[0] = zp::add(f[0], c, p);
    }
    zp::Poly g = pow_mod(zp::derivative(f, p), k, p);
    g[0] = zp::sub(g[0], lambda > 0 ? 1 : p - 1, p);
    zp::trim(g);
    f[1] = zp::sub(f[1], 1, p);
    zp::trim(f);
    return zp::resultant(f, g, p);
}

inline BigInt eliminate_exact(unsigned d, unsigned m, unsigned k, int lambda, const BigInt& c) {
    IntPoly f = iterate(d, m, c);
    IntPoly g = f.derivative().pow(k) - IntPoly{lambda};
    return exact::resultant(f - IntPoly::x(), g);
}

/// Bits of a bound on |coefficients| of the eliminant: Hadamard's inequality
/// on the Sylvester matrix at |c| = 1, where every z-coefficient is at most
/// its value at c = 1 (all iterate coefficients are nonnegative).
inline std::size_t coefficient_bound_bits(unsigned d, unsigned m, unsigned k) {
    IntPoly f = iterate(d, m, BigInt(1));
    IntPoly g = f.derivative().pow(k);
    auto norm_sq = [](const IntPoly& q, bool extra_low) {
        BigInt s = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            BigInt v = abs(q[i]);
            if (extra_low && i == 0) v += 1;
            s += v * v;
        }
        return s;
    };
    BigInt nf = norm_sq(f + IntPoly::x(), false), ng = norm_sq(g, true);
    std::size_t lf = (exact::bit_length(nf) + 1) / 2, lg = (exact::bit_length(ng) + 1) / 2;
    return lf * static_cast<std::size_t>(g.degree()) + lg * static_cast<std::size_t>(f.degree()) + 2;
}

/// Degree bound in c: every periodic point has |z| = O(|c|^(1/d)), so each
/// of the d^m factors ((f^m)'(z))^k - lambda is O(|c|^(k m (d-1)/d)).
inline std::size_t degree_bound(unsigned d, unsigned m, unsigned k) {
    std::size_t v = 1;
    for (unsigned j = 1; j < m; ++j) v *= d;
    return v * m * (d - 1) * k;
}

/// Res_z(f_c^m(z) - z, ((f_c^m)'(z))^k - lambda) as a polynomial in c, by
/// evaluation at c = 0..D modulo word primes, interpolation and CRT.
inline IntPoly eliminate_uncached(unsigned d, unsigned m, unsigned k, int lambda) {
    const std::size_t D = degree_bound(d, m, k);
    const std::size_t bits = coefficient_bound_bits(d, m, k);
    BigInt modulus = 1, target = BigInt(1) << static_cast<unsigned long>(bits + 1);
    std::vector<BigInt> acc;
    std::size_t want = bits / 30 + 2;
    std::vector<u64> primes = zp::large_primes(want);
    for (std::size_t idx = 0; modulus <= target; ++idx) {
        if (idx == primes.size()) primes = zp::large_primes(primes.size() * 2);
        u64 p = primes[idx];
        std::vector<u64> ys(D + 1);
        for (std::size_t c = 0; c <= D; ++c) ys[c] = eliminate_mod(d, m, k, lambda, c, p);
        zp::Poly r = zp::interpolate_consecutive(ys, p);
        exact::detail::crt_step(acc, modulus, r, p);
        modulus *= static_cast<unsigned long>(p);
    }
    IntPoly out = exact::detail::symmetric(acc, modulus);
    // spot checks away from the interpolation nodes
    for (long c : {-1L, -2L}) {
        if (out.eval(BigInt(c)) != eliminate_exact(d, m, k, lambda, BigInt(c)))
            throw std::logic_error("eliminate: interpolated resultant fails a spot check");
    }
    return out;
}

inline IntPoly eliminate(unsigned d, unsigned m, unsigned k, int lambda) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned, unsigned, unsigned, int>, IntPoly> cache;
    const auto key = std::make_tuple(d, m, k, lambda);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    IntPoly r = eliminate_uncached(d, m, k, lambda);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
    return r;
}

inline bool divides(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) return true;
    return exact::pseudo_remainder(q, p).is_zero();
}

}  // namespace detail

/// R(c) = Res_z(f_c^n(z) - z, (f_c^n)'(z) - lambda), primitive with positive
/// leading coefficient.
inline IntPoly per_resultant(unsigned d, unsigned n, int lambda) {
    check_instance(d, n);
    check_lambda(lambda);
    IntPoly r = detail::eliminate(d, n, 1, lambda);
    if (r.is_zero()) throw std::logic_error("per_resultant: identically zero");
    return r.primitive();
}

/// Least period of the cycle responsible for the irreducible factor P of
/// R(d, n, lambda), provided that cycle has multiplier exactly lambda;
/// nullopt when P only comes from a shorter cycle with another multiplier.
inline std::optional<unsigned> least_period(const IntPoly& P, unsigned d, unsigned n, int lambda) {
    for (unsigned m = 1; m < n; ++m) {
        if (n % m) continue;
        // cycles of period dividing m whose (n/m)-th multiplier power is lambda
        if (!detail::divides(P, detail::eliminate(d, m, n / m, lambda))) continue;
        if (!detail::divides(P, detail::eliminate(d, m, 1, lambda))) return std::nullopt;
        return least_period(P, d, m, lambda);
    }
    return n;
}

struct ParabolicCandidate {
    unsigned d = 2;
    unsigned period = 1;
    int multiplier_sign = 1;
    AlgebraicNumber parameter;
    bool verified = false;

    Json to_json() const {
        Json j;
        j["d"] = d;
        j["n"] = period;
        j["lambda"] = multiplier_sign;
        Json a = parameter.to_json();
        j["minpoly"] = a["minpoly"];
        j["locator"] = a["locator"];
        j["verified"] = verified;
        return j;
    }
};

namespace detail {

using cld = std::complex<long double>;

inline cld approx_parameter(const AlgebraicNumber& c) {
    if (c.is_real()) {
        exact::RootInterval iv = c.is_rational() ? exact::RootInterval{c.rational_value(), c.rational_value()}
                                                 : c.refined(Rational(1) / (BigInt(1) << 80));
        Rational mid = (iv.lo + iv.hi) / 2;
        long e = 0;
        // long double from a rational: scale by 2^70 then divide
        BigInt scaled = (mid.get_num() << 70) / mid.get_den();
        double hi = mpz_get_d_2exp(&e, scaled.get_mpz_t());
        return {std::ldexp(static_cast<long double>(hi), static_cast<int>(e - 70)), 0};
    }
    auto z = c.approx_complex();
    return {z.real(), z.imag()};
}

/// All roots of f_c^m(z) - z for complex c by Aberth iteration.
inline std::vector<cld> periodic_points(unsigned d, unsigned m, cld c) {
    std::vector<cld> f{0, 1};
    for (unsigned j = 0; j < m; ++j) {
        std::vector<cld> g{1};
        for (unsigned e = 0; e < d; ++e) {
            std::vector<cld> t(g.size() + f.size() - 1, 0);
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < f.size(); ++b) t[a + b] += g[a] * f[b];
            g = std::move(t);
        }
        g[0] += c;
        f = std::move(g);
    }
    f[1] -= 1;
    const std::size_t n = f.size() - 1;
    auto eval = [&](cld z, cld& dp) {
        cld v = f[n];
        dp = 0;
        for (std::size_t i = n; i-- > 0;) {
            dp = dp * z + v;
            v = v * z + f[i];
        }
        return v;
    };
    long double radius = 1 + std::pow(std::abs(c), 1.0L / d) * 2;
    std::vector<cld> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = std::polar(radius, 2 * 3.14159265358979323846L * i / n + 0.4L);
    for (int it = 0; it < 500; ++it) {
        long double moved = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cld dp, v = eval(z[i], dp);
            if (v == cld(0)) continue;
            cld ratio = v / dp, s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            cld w = ratio / (1.0L - ratio * s);
            z[i] -= w;
            moved = std::max(moved, std::abs(w));
        }
        if (moved < 1e-17L) break;
    }
    return z;
}

inline cld step(unsigned d, cld z, cld c) {
    cld r = 1;
    for (unsigned e = 0; e < d; ++e) r *= z;
    return r + c;
}

}  // namespace detail

/// Floating-point cross-check: some cycle of least period m with
/// multiplier within tol of lambda.
inline bool numeric_cycle_check(unsigned d, unsigned m, int lambda, const AlgebraicNumber& c, double tol = 1e-5) {
    const detail::cld cc = detail::approx_parameter(c);
    for (const auto& z0 : detail::periodic_points(d, m, cc)) {
        detail::cld z = z0, mult = 1;
        bool shorter = false;
        for (unsigned j = 0; j < m; ++j) {
            if (j > 0 && std::abs(z - z0) < 1e-7L * (1 + std::abs(z0))) shorter = true;
            detail::cld zd1 = 1;
            for (unsigned e = 0; e + 1 < d; ++e) zd1 *= z;
            mult *= static_cast<long double>(d) * zd1;
            z = detail::step(d, z, cc);
        }
        if (shorter) continue;
        if (std::abs(z - z0) > 1e-6L * (1 + std::abs(z0))) continue;
        if (std::abs(mult - static_cast<long double>(lambda)) < tol) return true;
    }
    return false;
}

struct QualifiedFactor {
    IntPoly minpoly;
    unsigned period;
};

/// Irreducible factors of R(d, n, lambda) that carry a cycle of multiplier
/// lambda, with its least period; sorted by polynomial.
inline std::vector<QualifiedFactor> qualified_factors(unsigned d, unsigned n, int lambda) {
    std::vector<QualifiedFactor> out;
    for (const auto& P : exact::irreducible_factors(per_resultant(d, n, lambda))) {
        if (P.degree() < 1) continue;
        if (auto m = least_period(P, d, n, lambda)) out.push_back({P, *m});
    }
    return out;
}

namespace detail {

inline void sort_candidates(std::vector<ParabolicCandidate>& v) {
    std::stable_sort(v.begin(), v.end(), [](const ParabolicCandidate& a, const ParabolicCandidate& b) {
        if (a.parameter.minpoly() != b.parameter.minpoly()) return a.parameter.minpoly() < b.parameter.minpoly();
        if (a.parameter.is_real() != b.parameter.is_real()) return a.parameter.is_real();
        if (a.parameter.is_real()) return compare(a.parameter, b.parameter) < 0;
        auto x = a.parameter.approx_complex(), y = b.parameter.approx_complex();
        return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
    });
}

inline ParabolicCandidate make_candidate(unsigned d, unsigned period, int lambda, AlgebraicNumber c) {
    ParabolicCandidate k;
    k.d = d;
    k.period = period;
    k.multiplier_sign = lambda;
    k.verified = numeric_cycle_check(d, period, lambda, c);
    k.parameter = std::move(c);
    return k;
}

}  // namespace detail

/// Every root of R(d, n, lambda) that has a cycle with multiplier exactly
/// lambda, real roots first within each minimal polynomial.
inline std::vector<ParabolicCandidate> solve_parabolic(unsigned d, unsigned n, int lambda) {
    std::vector<ParabolicCandidate> out;
    for (const auto& f : qualified_factors(d, n, lambda))
        for (auto& c : AlgebraicNumber::roots_of(f.minpoly)) out.push_back(detail::make_candidate(d, f.period, lambda, std::move(c)));
    detail::sort_candidates(out);
    return out;
}

/// Verified, totally real candidates over n <= n_max and lambda = +-1,
/// without repetitions, in increasing order.
inline std::vector<AlgebraicNumber> totally_real_parabolic_search(unsigned d, unsigned n_max = 3) {
    if (n_max < 1) throw std::invalid_argument("totally_real_parabolic_search: n_max >= 1");
    check_instance(d, n_max);
    std::vector<AlgebraicNumber> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (int lambda : {1, -1}) {
            for (const auto& f : qualified_factors(d, n, lambda)) {
                if (!algebraic::is_totally_real(f.minpoly)) continue;
                for (auto& c : AlgebraicNumber::real_roots_of(f.minpoly)) {
                    if (!numeric_cycle_check(d, f.period, lambda, c)) continue;
                    bool seen = false;
                    for (const auto& o : out) seen = seen || o == c;
                    if (!seen) out.push_back(std::move(c));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
    return out;
}

struct MilnorAuditEntry {
    IntPoly minpoly;
    unsigned period;
    int lambda;
    bool pass;
    std::vector<BigInt> bad_primes;
    bool integral;
};

struct MilnorAudit {
    bool pass = true;
    std::vector<MilnorAuditEntry> entries;

    Json to_json() const {
        Json j;
        j["pass"] = pass;
        Json failures = Json::array();
        for (const auto& e : entries) {
            if (e.pass) continue;
            Json bad = Json::array();
            for (const auto& p : e.bad_primes) bad.push_back(exact::to_string(p));
            failures.push_back({{"minpoly", exact::to_json(e.minpoly)},
                                {"n", e.period},
                                {"lambda", e.lambda},
                                {"integral", e.integral},
                                {"bad_primes", bad}});
        }
        j["checked"] = entries.size();
        j["failures"] = failures;
        return j;
    }
};

/// d^(d/(d-1)) c must be an algebraic integer prime to d for every candidate.
inline MilnorAudit milnor_audit(const std::vector<ParabolicCandidate>& candidates) {
    MilnorAudit audit;
    std::map<std::pair<IntPoly, unsigned>, algebraic::MilnorCheck> memo;
    for (const auto& k : candidates) {
        auto key = std::make_pair(k.parameter.minpoly(), k.d);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, algebraic::milnor_check(k.parameter.minpoly(), k.d)).first;
        const auto& m = it->second;
        MilnorAuditEntry e{k.parameter.minpoly(), k.period, k.multiplier_sign, m.integral && m.coprime, m.bad_primes, m.integral};
        audit.pass = audit.pass && e.pass;
        audit.entries.push_back(std::move(e));
    }
    return audit;
}

}  // namespace multibrot::parabolic
