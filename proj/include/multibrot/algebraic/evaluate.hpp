#pragma once

#include "multibrot/algebraic/algebraic_number.hpp"
#include "multibrot/exact/dyadic.hpp"
#include "multibrot/exact/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace multibrot::algebraic {

/// Sign of h(a) for a real algebraic number a.
inline int sign_at(const IntPoly& h, const AlgebraicNumber& a) {
    if (h.is_zero()) return 0;
    if (a.is_rational()) return h.sign_at(a.rational_value());
    // the minimal polynomial is irreducible: h(a) = 0 iff it divides h
    if (exact::gcd(h, a.minpoly()).degree() > 0) return 0;
    RootInterval iv = a.interval();
    while (true) {
        int roots = exact::sturm_count(h, iv.lo, iv.hi) + (h.sign_at(iv.lo) == 0 ? 1 : 0);
        if (roots == 0) return h.sign_at(iv.lo);
        iv = exact::refine(a.minpoly(), iv, iv.width() / 4);
        if (iv.exact()) return h.sign_at(iv.lo);
    }
}

/// Rational enclosure of h over [lo, hi] by interval Horner evaluation.
inline std::pair<Rational, Rational> enclose(const IntPoly& h, const Rational& lo, const Rational& hi) {
    Rational rlo = 0, rhi = 0;
    for (std::size_t i = h.size(); i-- > 0;) {
        Rational c[4] = {rlo * lo, rlo * hi, rhi * lo, rhi * hi};
        rlo = *std::min_element(c, c + 4) + Rational(h[i]);
        rhi = *std::max_element(c, c + 4) + Rational(h[i]);
    }
    return {rlo, rhi};
}

/// Dyadic enclosure of a real algebraic number with about `bits` bits.
inline exact::DyadicInterval enclosure(const AlgebraicNumber& a, unsigned bits) {
    if (a.is_rational()) return exact::DyadicInterval::from_rational(a.rational_value(), bits);
    RootInterval iv = a.refined(Rational(1) / (BigInt(1) << (bits + 8)));
    auto lo = exact::DyadicInterval::from_rational(iv.lo, bits + 8);
    auto hi = exact::DyadicInterval::from_rational(iv.hi, bits + 8);
    return {lo.lo(), hi.hi(), bits};
}

}  // namespace multibrot::algebraic
