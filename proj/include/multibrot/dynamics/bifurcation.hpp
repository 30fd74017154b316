#pragma once

// The period-doubling construction on the real slice for even d: a
// multiplier lambda in (0, 1) of the attracting 2-cycle determines x in
// (0, 1) as the root of g_lambda, and x determines c through
//   c(x) = -(sum_{k<=d} x^k) / (sum_{k<d} x^k)^(d/(d-1)).

#include "multibrot/dynamics/family.hpp"
#include "multibrot/exact/dyadic.hpp"

#include <optional>
#include <stdexcept>

namespace multibrot::dynamics {

using exact::DyadicInterval;

/// q * g_lambda(x) for lambda = p / q, where
/// g_lambda(x) = lambda (sum_{k<d} x^k)^2 - d^2 x^(d-1).
inline IntPoly g_lambda(unsigned d, const Rational& lambda) {
    require_degree(d);
    std::vector<BigInt> ones(d, BigInt(1));
    IntPoly s(std::move(ones));
    return IntPoly::constant(lambda.get_num()) * s * s -
           IntPoly::monomial(lambda.get_den() * BigInt(d) * BigInt(d), d - 1);
}

/// The unique root of g_lambda in (0, 1), with a Sturm-certified interval.
inline AlgebraicNumber lambda_to_x(unsigned d, const Rational& lambda) {
    require_degree(d);
    if (lambda <= 0 || lambda >= 1) throw std::domain_error("lambda_to_x: lambda must lie in (0, 1)");
    IntPoly g = g_lambda(d, lambda);
    if (exact::sturm_count(g, Rational(0), Rational(1)) != 1 || g.sign_at(Rational(1)) == 0)
        throw std::logic_error("lambda_to_x: root in (0, 1) is not unique");
    for (const auto& f : exact::irreducible_factors(g)) {
        if (exact::sturm_count(f, Rational(0), Rational(1)) != 1) continue;
        for (const auto& iv : exact::isolate_real_roots(f)) {
            if (iv.lo >= 0 && iv.hi <= 1) {
                return AlgebraicNumber::real(f, iv);
            }
            if (iv.lo < 1 && iv.hi > 0) {
                // straddles an endpoint: clip, the endpoint is not a root
                RootInterval clipped{std::max(iv.lo, Rational(0)), std::min(iv.hi, Rational(1))};
                if (exact::sturm_count(f, clipped.lo, clipped.hi) == 1) return AlgebraicNumber::real(f, clipped);
            }
        }
    }
    throw std::logic_error("lambda_to_x: root not found");
}

struct XToC {
    std::optional<AlgebraicNumber> exact;  // at x = 0 and x = 1
    DyadicInterval enclosure;
};

namespace detail {

inline DyadicInterval c_of_x(unsigned d, const DyadicInterval& x) {
    const unsigned bits = x.bits();
    DyadicInterval s_lo = DyadicInterval::exact(1, bits);  // sum_{k<d} x^k
    DyadicInterval power = DyadicInterval::exact(1, bits);
    for (unsigned k = 1; k < d; ++k) {
        power = power * x;
        s_lo = s_lo + power;
    }
    DyadicInterval s_hi = s_lo + power * x;  // sum_{k<=d} x^k
    DyadicInterval den = s_lo.pow(d).root(d - 1);
    return -(s_hi / den);
}

}  // namespace detail

inline XToC x_to_c(unsigned d, const Rational& x, unsigned bits = 128) {
    require_degree(d);
    if (x < 0 || x > 1) throw std::domain_error("x_to_c: x must lie in [0, 1]");
    XToC out;
    if (x == 0) {
        out.exact = AlgebraicNumber(Rational(-1));
    } else if (x == 1) {
        out.exact = constants(d).gamma;
    }
    out.enclosure = detail::c_of_x(d, DyadicInterval::from_rational(x, bits + 16)).with_bits(bits);
    return out;
}

inline XToC x_to_c(unsigned d, const AlgebraicNumber& x, unsigned bits = 128) {
    if (x.is_rational()) return x_to_c(d, x.rational_value(), bits);
    require_degree(d);
    if (compare(x, Rational(0)) < 0 || compare(x, Rational(1)) > 0) throw std::domain_error("x_to_c: x must lie in [0, 1]");
    XToC out;
    out.enclosure = detail::c_of_x(d, algebraic::enclosure(x, bits + 16)).with_bits(bits);
    return out;
}

}  // namespace multibrot::dynamics
