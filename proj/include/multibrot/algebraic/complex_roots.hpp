#pragma once

// All complex roots of a squarefree integer polynomial, approximated by
// Aberth iteration and then certified exactly: by Smith's Gerschgorin-type
// theorem every disc D(z_i, n |W_i|) with W_i the Weierstrass correction
// holds exactly one root once the discs are pairwise disjoint.

#include "multibrot/exact/int_poly.hpp"
#include "multibrot/exact/real_roots.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <type_traits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace multibrot::algebraic {

using exact::BigInt;
using exact::IntPoly;
using exact::Rational;

/// Closed rational rectangle in the complex plane.
struct ComplexBox {
    Rational re_lo, re_hi, im_lo, im_hi;

    bool meets_real_axis() const { return im_lo <= 0 && im_hi >= 0; }
    bool disjoint(const ComplexBox& o) const {
        return re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo;
    }
    bool contains(const ComplexBox& o) const {
        return re_lo <= o.re_lo && o.re_hi <= re_hi && im_lo <= o.im_lo && o.im_hi <= im_hi;
    }
    ComplexBox conjugate() const { return {re_lo, re_hi, -im_hi, -im_lo}; }
    std::complex<double> center() const { return {Rational((re_lo + re_hi) / 2).get_d(), Rational((im_lo + im_hi) / 2).get_d()}; }
    Rational width() const { return std::max(Rational(re_hi - re_lo), Rational(im_hi - im_lo)); }
};

struct GaussRational {
    Rational re, im;
};

inline GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
inline GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
inline GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

namespace detail {

template <class F>
Rational to_rational(F x) {
    using std::floor;
    using std::frexp;
    using std::ldexp;
    if (x == 0) return 0;
    bool neg = x < 0;
    if (neg) x = -x;
    int e = 0;
    F m = frexp(x, &e);
    BigInt acc = 0;
    // read 32 bits at a time until the mantissa is exhausted
    for (int chunk = 0; chunk < 12 && m != 0; ++chunk) {
        m = ldexp(m, 32);
        F whole = floor(m);
        acc <<= 32;
        acc += static_cast<unsigned long>(static_cast<unsigned long long>(whole));
        m -= whole;
        e -= 32;
    }
    Rational r(acc);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

template <class F>
F from_bigint(const BigInt& v, long shift) {
    // v * 2^-shift without overflowing double
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    using std::ldexp;
    F out = F(m);
    // refine with a second chunk of bits for wider types
    if constexpr (!std::is_same_v<F, long double> && !std::is_same_v<F, double>) {
        BigInt rest = abs(v);
        long bits = static_cast<long>(exact::bit_length(rest));
        F acc = 0;
        for (long b = bits; b > 0 && b > bits - 256; b -= 32) {
            long lo = std::max(0L, b - 32);
            BigInt chunk = rest >> static_cast<unsigned long>(lo);
            chunk &= BigInt(0xffffffffUL);
            acc += ldexp(F(chunk.get_ui()), static_cast<int>(lo - bits));
        }
        out = v < 0 ? F(-acc) : acc;
        e = bits;
    }
    return ldexp(out, static_cast<int>(e - shift));
}

template <class F>
struct Cx {
    F re = 0, im = 0;
    Cx() = default;
    Cx(F r, F i = 0) : re(r), im(i) {}
    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        F n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    F norm() const {
        using std::sqrt;
        return sqrt(re * re + im * im);
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// Aberth-Ehrlich iteration; returns approximations of all n roots.
template <class F>
std::vector<Cx<F>> aberth(const IntPoly& p, int max_iter, F tol) {
    using std::abs;
    using std::acos;
    using std::cos;
    using std::pow;
    using std::sin;
    using C = Cx<F>;
    const int n = p.degree();
    // scale coefficients into a comfortable exponent range
    long top = static_cast<long>(p.max_coeff_bits());
    std::vector<F> a(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = from_bigint<F>(p[static_cast<std::size_t>(i)], top);
    auto eval = [&](const C& z, C& dp) {
        C v(a[static_cast<std::size_t>(n)]);
        dp = C(0);
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * z + v;
            v = v * z + C(a[static_cast<std::size_t>(i)]);
        }
        return v;
    };
    // initial points on a circle of Cauchy-bound radius, rotated off the axes
    F radius = 0;
    for (int i = 0; i < n; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        F r = pow(F(abs(a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(n)])), F(1) / F(n - i));
        if (r > radius) radius = r;
    }
    if (radius == 0) radius = 1;
    std::vector<C> z(static_cast<std::size_t>(n));
    const F two_pi = F(2) * F(acos(F(-1)));
    for (int k = 0; k < n; ++k) {
        F theta = two_pi * F(k) / F(n) + F(0.4);
        z[static_cast<std::size_t>(k)] = C(F(radius * cos(theta)), F(radius * sin(theta)));
    }
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            C dp;
            C v = eval(z[static_cast<std::size_t>(i)], dp);
            if (v.is_zero()) {
                done[static_cast<std::size_t>(i)] = true;
                continue;
            }
            C ratio = v / dp;
            C sum(0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum = sum + C(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            C w = ratio / (C(1) - ratio * sum);
            z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - w;
            if (w.norm() <= tol * (z[static_cast<std::size_t>(i)].norm() + tol)) {
                done[static_cast<std::size_t>(i)] = true;
            } else {
                all = false;
            }
        }
        if (all) break;
    }
    return z;
}

/// Certified boxes from approximations, or nullopt if the discs overlap.
inline std::optional<std::vector<ComplexBox>> certify(const IntPoly& p, const std::vector<GaussRational>& z) {
    const int n = p.degree();
    const Rational lc(p.lead());
    std::vector<ComplexBox> boxes;
    boxes.reserve(z.size());
    for (int i = 0; i < n; ++i) {
        const GaussRational& zi = z[static_cast<std::size_t>(i)];
        GaussRational v{Rational(p.lead()), 0};
        for (int k = n - 1; k >= 0; --k) v = v * zi + GaussRational{Rational(p[static_cast<std::size_t>(k)]), 0};
        GaussRational den{lc, 0};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            GaussRational diff = zi - z[static_cast<std::size_t>(j)];
            if (diff.re == 0 && diff.im == 0) return std::nullopt;
            den = den * diff;
        }
        GaussRational w = v / den;
        Rational r = Rational(n) * (abs(w.re) + abs(w.im));
        boxes.push_back({zi.re - r, zi.re + r, zi.im - r, zi.im + r});
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (!boxes[i].disjoint(boxes[j])) return std::nullopt;
    return boxes;
}

template <class F>
std::optional<std::vector<ComplexBox>> attempt(const IntPoly& p, F tol) {
    auto approx = aberth<F>(p, 2000, tol);
    std::vector<GaussRational> z;
    z.reserve(approx.size());
    for (const auto& c : approx) z.push_back({to_rational(c.re), to_rational(c.im)});
    return certify(p, z);
}

}  // namespace detail

/// One certified box per complex root of a squarefree polynomial, with the
/// non-real roots guaranteed off the real axis. Boxes that meet the axis
/// belong to the real roots.
inline std::vector<ComplexBox> isolate_complex_roots(const IntPoly& p_in) {
    IntPoly p = exact::squarefree_part(p_in);
    const int n = p.degree();
    if (n < 1) return {};
    if (n == 1) {
        Rational r = exact::make_rational(-p[0], p[1]);
        return {{r, r, 0, 0}};
    }
    const int real_count = exact::sturm_count(p);
    auto accept = [&](const std::optional<std::vector<ComplexBox>>& boxes) {
        if (!boxes) return false;
        int off_axis = 0;
        for (const auto& b : *boxes) off_axis += b.meets_real_axis() ? 0 : 1;
        return off_axis == n - real_count;
    };
    using boost::multiprecision::cpp_bin_float_50;
    using boost::multiprecision::cpp_bin_float_100;
    using F200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    if (auto b = detail::attempt<long double>(p, 1e-17L); accept(b)) return *b;
    if (auto b = detail::attempt<cpp_bin_float_50>(p, cpp_bin_float_50("1e-48")); accept(b)) return *b;
    if (auto b = detail::attempt<cpp_bin_float_100>(p, cpp_bin_float_100("1e-98")); accept(b)) return *b;
    if (auto b = detail::attempt<F200>(p, F200("1e-195")); accept(b)) return *b;
    throw std::runtime_error("isolate_complex_roots: could not certify root discs");
}

/// The non-real roots only, one box each.
inline std::vector<ComplexBox> isolate_nonreal_roots(const IntPoly& p) {
    std::vector<ComplexBox> out;
    for (auto& b : isolate_complex_roots(p))
        if (!b.meets_real_axis()) out.push_back(std::move(b));
    return out;
}

}  // namespace multibrot::algebraic
