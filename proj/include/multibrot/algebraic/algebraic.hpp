#pragma once

// Galois-conjugate reasoning on algebraic numbers: total reality, interval
// containment of all conjugates, scaling, p-adic unit tests, roots of
// unity and the arc images 2 cos(2 pi k / m) confined to [-2, 0].

#include "multibrot/algebraic/algebraic_number.hpp"
#include "multibrot/algebraic/cyclotomic.hpp"
#include "multibrot/algebraic/newton_polygon.hpp"
#include "multibrot/exact/factor.hpp"
#include "multibrot/exact/real_roots.hpp"
#include "multibrot/exact/resultant.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace multibrot::algebraic {

inline bool is_totally_real(const IntPoly& minpoly) { return exact::sturm_count(minpoly) == minpoly.degree(); }
inline bool is_totally_real(const AlgebraicNumber& a) { return is_totally_real(a.minpoly()); }

/// Roots of p in the closed interval [lo, hi], counted without multiplicity.
inline int roots_in_closed(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (lo == hi) return p.sign_at(lo) == 0 ? 1 : 0;
    return exact::sturm_count(p, lo, hi) + (p.sign_at(lo) == 0 ? 1 : 0);
}

/// True iff every conjugate is real and lies in [lo, hi].
inline bool conjugates_in_interval(const IntPoly& minpoly, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("conjugates_in_interval: empty interval");
    if (!is_totally_real(minpoly)) return false;
    return roots_in_closed(minpoly, lo, hi) == minpoly.degree();
}
inline bool conjugates_in_interval(const AlgebraicNumber& a, const Rational& lo, const Rational& hi) {
    return conjugates_in_interval(a.minpoly(), lo, hi);
}

/// Canonical minimal polynomial of r * a for rational r != 0.
inline IntPoly scaled_minpoly(const AlgebraicNumber& a, const Rational& r) {
    if (r == 0) throw std::domain_error("scaled_minpoly: zero scale");
    return a.minpoly().scale_roots(r).primitive();
}

namespace detail {

/// Integer polynomial through (0, v_0), ..., (N, v_N), by divided differences.
inline IntPoly interpolate_integers(const std::vector<BigInt>& values) {
    const std::size_t n = values.size();
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    // Newton form sum dd[i] prod_{j<i} (T - j), expanded over Q
    std::vector<Rational> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly = poly * (T - i) + dd[i]
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * Rational(static_cast<long>(i));
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    std::vector<BigInt> coeffs;
    for (const auto& c : poly) {
        if (c.get_den() != 1) throw std::logic_error("interpolation produced a non-integer coefficient");
        coeffs.push_back(c.get_num());
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace detail

/// Minimal polynomial of s * a for real algebraic a and s, through
/// R(T) = Res_y(S(y), y^n A(T / y)) followed by factoring and locating s a.
inline IntPoly scaled_minpoly(const AlgebraicNumber& a, const AlgebraicNumber& s) {
    if (!a.is_real() || !s.is_real()) throw std::domain_error("scaled_minpoly: real operands only");
    if (s.sign() == 0) throw std::domain_error("scaled_minpoly: zero scale");
    if (s.is_rational()) return scaled_minpoly(a, s.rational_value());
    const IntPoly& A = a.minpoly();
    const IntPoly& S = s.minpoly();
    const int n = A.degree();
    const int total = n * S.degree();
    std::vector<BigInt> values;
    for (int t = 0; t <= total; ++t) {
        std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
        BigInt tk = 1;
        for (int k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(n - k)] = A[static_cast<std::size_t>(k)] * tk;
            tk *= t;
        }
        IntPoly in_y(std::move(c));
        values.push_back(in_y.is_zero() ? BigInt(0) : exact::resultant(S, in_y));
    }
    IntPoly R = detail::interpolate_integers(values);
    auto factors = exact::irreducible_factors(R);
    Rational w = Rational(1, 1);
    for (int round = 0; round < 400; ++round) {
        RootInterval ia = a.refined(w), is = s.refined(w);
        Rational c[4] = {ia.lo * is.lo, ia.lo * is.hi, ia.hi * is.lo, ia.hi * is.hi};
        Rational lo = *std::min_element(c, c + 4), hi = *std::max_element(c, c + 4);
        const IntPoly* hit = nullptr;
        int total_hits = 0;
        for (const auto& f : factors) {
            int k = roots_in_closed(f, lo, hi);
            total_hits += k;
            if (k == 1) hit = &f;
        }
        if (total_hits == 1 && hit) return *hit;
        w /= 16;
    }
    throw std::runtime_error("scaled_minpoly: could not separate the product");
}

/// Power map W(T) = prod (T - d^d c_i^(d-1)) over the conjugates c_i, with
/// rational coefficients, from power sums and Newton's identities.
inline std::vector<Rational> milnor_power_polynomial(const IntPoly& minpoly, unsigned d) {
    const int n = minpoly.degree();
    const std::size_t top = static_cast<std::size_t>(n) * (d - 1);
    const Rational an(minpoly.lead());
    // e_k of the c_i
    std::vector<Rational> e(static_cast<std::size_t>(n + 1));
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        e[static_cast<std::size_t>(k)] = Rational(minpoly[static_cast<std::size_t>(n - k)]) / an;
        if (k % 2) e[static_cast<std::size_t>(k)] = -e[static_cast<std::size_t>(k)];
    }
    std::vector<Rational> p(top + 1);
    p[0] = n;
    for (std::size_t k = 1; k <= top; ++k) {
        Rational acc = 0;
        const std::size_t lim = std::min<std::size_t>(k - 1, static_cast<std::size_t>(n));
        for (std::size_t i = 1; i <= lim; ++i) {
            Rational term = e[i] * p[k - i];
            acc += (i % 2) ? term : Rational(-term);
        }
        if (k <= static_cast<std::size_t>(n)) {
            Rational term = Rational(static_cast<long>(k)) * e[k];
            acc += (k % 2) ? term : Rational(-term);
        }
        p[k] = acc;
    }
    const BigInt dd = exact::pow(BigInt(d), d);
    std::vector<Rational> q(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k)
        q[static_cast<std::size_t>(k)] = Rational(exact::pow(dd, static_cast<unsigned long>(k))) * p[static_cast<std::size_t>(k) * (d - 1)];
    std::vector<Rational> E(static_cast<std::size_t>(n + 1));
    E[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rational term = E[static_cast<std::size_t>(k - i)] * q[static_cast<std::size_t>(i)];
            acc += (i % 2) ? term : Rational(-term);
        }
        E[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    // W(T) = sum_k (-1)^k E_k T^(n-k), coefficients low degree first
    std::vector<Rational> w(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(n - k)] = (k % 2) ? Rational(-E[static_cast<std::size_t>(k)]) : E[static_cast<std::size_t>(k)];
    return w;
}

struct MilnorCheck {
    bool integral = false;                // d^(d/(d-1)) c is an algebraic integer
    bool coprime = false;                 // and a unit at every prime dividing d
    std::vector<BigInt> bad_primes;       // primes p | d where a conjugate is not a p-adic unit
    std::vector<Rational> power_polynomial;
};

inline MilnorCheck milnor_check(const IntPoly& minpoly, unsigned d) {
    if (d < 2) throw std::invalid_argument("milnor_check: d >= 2");
    if (minpoly.degree() < 1 || minpoly[0] == 0) throw std::domain_error("milnor_check: c must be nonzero");
    MilnorCheck out;
    out.power_polynomial = milnor_power_polynomial(minpoly, d);
    out.integral = std::all_of(out.power_polynomial.begin(), out.power_polynomial.end(),
                               [](const Rational& r) { return r.get_den() == 1; });
    if (!out.integral) return out;
    // the w_i are algebraic integers; all are p-units iff p does not divide W(0)
    const BigInt w0 = out.power_polynomial[0].get_num();
    for (auto p : exact::prime_divisors(d)) {
        BigInt bp(static_cast<unsigned long>(p));
        if (exact::divides(bp, w0)) out.bad_primes.push_back(bp);
    }
    out.coprime = out.bad_primes.empty();
    return out;
}

inline bool is_milnor_unit(const IntPoly& minpoly, unsigned d) {
    auto m = milnor_check(minpoly, d);
    return m.integral && m.coprime;
}
inline bool is_milnor_unit(const AlgebraicNumber& c, unsigned d) { return is_milnor_unit(c.minpoly(), d); }

/// Order m when the minimal polynomial is Phi_m, otherwise nullopt.
inline std::optional<unsigned> is_root_of_unity(const IntPoly& minpoly) {
    const std::uint64_t n = static_cast<std::uint64_t>(minpoly.degree());
    if (n < 1) return std::nullopt;
    // phi(m) >= sqrt(m / 2), so m <= 2 n^2
    for (std::uint64_t m = 1; m <= 2 * n * n + 2; ++m) {
        if (exact::euler_phi(m) != n) continue;
        if (cyclotomic(m) == minpoly) return static_cast<unsigned>(m);
    }
    return std::nullopt;
}
inline std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& a) { return is_root_of_unity(a.minpoly()); }

namespace detail {

/// Certified positive root of p near x > 0: a sign change between two
/// positive rationals bracketing x.
inline bool has_positive_root_near(const IntPoly& p, double x) {
    if (!(x > 0)) return false;
    for (int bits : {24, 40}) {
        const double scale = std::ldexp(1.0, bits);
        BigInt mid(std::floor(x * scale));
        for (long spread : {1L, 4L, 64L}) {
            BigInt lo_n = mid - spread, hi_n = mid + spread;
            if (lo_n <= 0) continue;
            Rational lo = exact::make_rational(lo_n, BigInt(1) << static_cast<unsigned long>(bits));
            Rational hi = exact::make_rational(hi_n, BigInt(1) << static_cast<unsigned long>(bits));
            int a = p.sign_at(lo), b = p.sign_at(hi);
            if (a == 0 || b == 0 || a != b) return true;
        }
    }
    return false;
}

}  // namespace detail

/// Images z + 1/z of roots of unity z of order m <= B all of whose
/// conjugates lie on the arc Re z <= 0; equivalently every root of the
/// minimal polynomial of 2 cos(2 pi / m) lies in [-2, 0].
inline std::vector<AlgebraicNumber> arc_unit_images(unsigned B) {
    if (B < 1) throw std::invalid_argument("arc_unit_images: B >= 1");
    std::vector<AlgebraicNumber> out;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (unsigned m = 1; m <= B; ++m) {
        IntPoly psi = real_cyclotomic(m);
        // the conjugate 2 cos(2 pi / m) is positive for m >= 5
        if (detail::has_positive_root_near(psi, 2.0 * std::cos(two_pi / m))) continue;
        if (!conjugates_in_interval(psi, Rational(-2), Rational(0))) continue;
        for (auto& r : AlgebraicNumber::real_roots_of(psi)) {
            bool seen = false;
            for (const auto& o : out) seen = seen || o == r;
            if (!seen) out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; });
    return out;
}

}  // namespace multibrot::algebraic
