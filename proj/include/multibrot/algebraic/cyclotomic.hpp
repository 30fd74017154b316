#pragma once

#include "multibrot/exact/int_poly.hpp"

#include <stdexcept>

namespace multibrot::algebraic {

using exact::IntPoly;

inline int moebius(std::uint64_t n) {
    int mu = 1;
    for (const auto& [p, e] : exact::factor_small(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

/// Phi_m = prod_{k | m} (T^k - 1)^mu(m/k).
inline IntPoly cyclotomic(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("cyclotomic: m must be positive");
    IntPoly num{1}, den{1};
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (m % k) continue;
        int mu = moebius(m / k);
        if (mu == 0) continue;
        IntPoly f = IntPoly::monomial(1, k) - IntPoly{1};
        if (mu > 0) {
            num *= f;
        } else {
            den *= f;
        }
    }
    IntPoly q;
    if (!exact::divide_exact(num, den, &q)) throw std::logic_error("cyclotomic: inexact division");
    return q;
}

/// Minimal polynomial of 2 cos(2 pi / m) = z + 1/z for a primitive m-th
/// root of unity z, obtained from the palindromic Phi_m through
/// z^j + z^-j = V_j(y), V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1}.
inline IntPoly real_cyclotomic(std::uint64_t m) {
    if (m == 1) return IntPoly{-2, 1};
    if (m == 2) return IntPoly{2, 1};
    IntPoly phi = cyclotomic(m);
    const int k = phi.degree() / 2;
    IntPoly y = IntPoly::x();
    IntPoly v_prev{2}, v_cur = y;
    IntPoly out = IntPoly::constant(phi[static_cast<std::size_t>(k)]);
    for (int j = 1; j <= k; ++j) {
        out += IntPoly::constant(phi[static_cast<std::size_t>(k + j)]) * v_cur;
        IntPoly next = y * v_cur - v_prev;
        v_prev = v_cur;
        v_cur = next;
    }
    return out.primitive();
}

}  // namespace multibrot::algebraic
