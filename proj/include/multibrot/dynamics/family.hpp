#pragma once

// f_c(z) = z^d + c on the real line: the constants alpha, beta, gamma,
// delta, the real slice of the multibrot set and the real fixed points.

#include "multibrot/algebraic/algebraic.hpp"
#include "multibrot/algebraic/evaluate.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multibrot::dynamics {

using algebraic::AlgebraicNumber;
using exact::BigInt;
using exact::IntPoly;
using exact::Rational;
using exact::RootInterval;

inline void require_degree(unsigned d) {
    if (d < 2) throw std::invalid_argument("degree d must be >= 2");
}

/// The real root of `defining` with the requested sign, as an algebraic number.
inline AlgebraicNumber signed_root(const IntPoly& defining, int want_sign) {
    for (auto& r : AlgebraicNumber::real_roots_of(defining))
        if (r.sign() == want_sign) return r;
    throw std::logic_error("signed_root: no root of the requested sign");
}

struct Constants {
    AlgebraicNumber alpha, beta, gamma, delta;
};

/// alpha = (d-1) d^(-d/(d-1)), beta = -2^(1/(d-1)), gamma = -(d+1) d^(-d/(d-1)),
/// delta = d^(-1/(d-1)).
inline Constants constants(unsigned d) {
    require_degree(d);
    const unsigned e = d - 1;
    const BigInt dd = exact::pow(BigInt(d), d);
    Constants k;
    // d^d T^(d-1) = (d-1)^(d-1)
    k.alpha = signed_root(IntPoly::monomial(dd, e) - IntPoly::constant(exact::pow(BigInt(e), e)), 1);
    // beta^(d-1) = (-1)^(d-1) 2
    k.beta = signed_root(IntPoly::monomial(1, e) - IntPoly::constant(BigInt(e % 2 ? -2 : 2)), -1);
    // d^d T^(d-1) = (-1)^(d-1) (d+1)^(d-1)
    BigInt g = exact::pow(BigInt(d + 1), e);
    if (e % 2) g = -g;
    k.gamma = signed_root(IntPoly::monomial(dd, e) - IntPoly::constant(g), -1);
    // d T^(d-1) = 1
    k.delta = signed_root(IntPoly::monomial(BigInt(d), e) - IntPoly{1}, 1);
    return k;
}

/// Real slice of M_d: [-alpha, alpha] for odd d, [beta, alpha] for even d.
inline std::pair<AlgebraicNumber, AlgebraicNumber> real_slice(unsigned d) {
    Constants k = constants(d);
    if (d % 2) return {signed_root(k.alpha.minpoly().reflect(), -1), k.alpha};
    return {k.beta, k.alpha};
}

enum class FixedPointClass { superattracting, attracting, parabolic, repelling };

inline std::string to_string(FixedPointClass c) {
    switch (c) {
        case FixedPointClass::superattracting: return "superattracting";
        case FixedPointClass::attracting: return "attracting";
        case FixedPointClass::parabolic: return "parabolic";
        case FixedPointClass::repelling: return "repelling";
    }
    return "?";
}

struct ClassifiedFixedPoint {
    AlgebraicNumber location;
    Rational multiplier_lo, multiplier_hi;  // enclosure; a point when exact
    std::optional<int> exact_multiplier;    // set for multiplier 0, 1 or -1
    FixedPointClass kind;
};

namespace detail {

inline ClassifiedFixedPoint classify(unsigned d, AlgebraicNumber z) {
    ClassifiedFixedPoint out{z, 0, 0, std::nullopt, FixedPointClass::repelling};
    const unsigned e = d - 1;
    if (z.sign() == 0) {
        out.exact_multiplier = 0;
        out.kind = FixedPointClass::superattracting;
        return out;
    }
    // m = d z^(d-1); compare with +1 and -1 exactly
    IntPoly m_minus_1 = IntPoly::monomial(BigInt(d), e) - IntPoly{1};
    IntPoly m_plus_1 = IntPoly::monomial(BigInt(d), e) + IntPoly{1};
    int s_minus = algebraic::sign_at(m_minus_1, z);
    int s_plus = algebraic::sign_at(m_plus_1, z);
    if (s_minus == 0 || s_plus == 0) {
        out.exact_multiplier = s_minus == 0 ? 1 : -1;
        out.multiplier_lo = out.multiplier_hi = *out.exact_multiplier;
        out.kind = FixedPointClass::parabolic;
        return out;
    }
    // |m| < 1 iff m - 1 < 0 < m + 1
    out.kind = (s_minus < 0 && s_plus > 0) ? FixedPointClass::attracting : FixedPointClass::repelling;
    RootInterval iv = z.is_rational() ? RootInterval{z.rational_value(), z.rational_value()}
                                      : z.refined(Rational(1) / (BigInt(1) << 80));
    auto enc = algebraic::enclose(IntPoly::monomial(BigInt(d), e), iv.lo, iv.hi);
    out.multiplier_lo = enc.first;
    out.multiplier_hi = enc.second;
    return out;
}

}  // namespace detail

/// Real fixed points of z^d + c with their multipliers d z^(d-1).
inline std::vector<ClassifiedFixedPoint> real_fixed_points(unsigned d, const Rational& c) {
    require_degree(d);
    IntPoly p = IntPoly::monomial(1, d) - IntPoly::x();
    std::vector<BigInt> cleared = (p * IntPoly::constant(c.get_den())).coeffs();
    cleared[0] += c.get_num();
    std::vector<ClassifiedFixedPoint> out;
    for (auto& z : AlgebraicNumber::real_roots_of(IntPoly(std::move(cleared)))) out.push_back(detail::classify(d, z));
    return out;
}

/// Same for a real algebraic c: the fixed points are the real roots z of
/// minpoly_c(z - z^d) whose value z - z^d is this particular conjugate.
inline std::vector<ClassifiedFixedPoint> real_fixed_points(unsigned d, const AlgebraicNumber& c) {
    require_degree(d);
    if (c.is_rational()) return real_fixed_points(d, c.rational_value());
    if (!c.is_real()) throw std::domain_error("real_fixed_points: c must be real");
    IntPoly inner = IntPoly::x() - IntPoly::monomial(1, d);
    IntPoly n = c.minpoly().compose(inner);
    const RootInterval civ = c.interval();
    std::vector<ClassifiedFixedPoint> out;
    for (auto& z : AlgebraicNumber::real_roots_of(n)) {
        RootInterval ziv = z.interval();
        while (true) {
            auto enc = z.is_rational() ? algebraic::enclose(inner, ziv.lo, ziv.lo) : algebraic::enclose(inner, ziv.lo, ziv.hi);
            if (enc.second < civ.lo || enc.first > civ.hi) break;  // another conjugate
            if (civ.lo < enc.first && enc.second < civ.hi) {
                out.push_back(detail::classify(d, z));
                break;
            }
            ziv = exact::refine(z.minpoly(), ziv, ziv.width() / 4);
        }
    }
    return out;
}

}  // namespace multibrot::dynamics
