#include "multibrot/exact/factor.hpp"
#include "multibrot/exact/json.hpp"
#include "multibrot/exact/real_roots.hpp"
#include "multibrot/exact/resultant.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace multibrot::exact;

namespace {

// Oracle: resultant as the product of Q over the roots of P, for P with
// rational roots only, via lc(P)^deg Q * prod Q(r).
Rational resultant_by_roots(const BigInt& lc, const std::vector<Rational>& roots, const IntPoly& q) {
    Rational r = pow(Rational(lc), q.degree());
    for (const auto& x : roots) r *= q.eval(x);
    return r;
}

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long range) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-range, range);
    int n = deg(rng);
    std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}), -1);
    EXPECT_EQ(resultant(IntPoly{1, 0, 1}, IntPoly{-1, 0, 1}), 4);
    EXPECT_EQ(resultant(IntPoly{-1, 2}, IntPoly{-1, 3}), 1);
    EXPECT_THROW(resultant(IntPoly{}, IntPoly{1, 1}), std::domain_error);
}

TEST(Resultant, AgainstRootProduct) {
    // P = 6 (T - 1/2)(T + 2/3)(T - 3) has rational roots only.
    IntPoly p = IntPoly{-1, 2} * IntPoly{2, 3} * IntPoly{-3, 1};
    std::vector<Rational> roots{make_rational(1, 2), make_rational(-2, 3), make_rational(3)};
    IntPoly q{5, -7, 0, 2, 1};
    EXPECT_EQ(Rational(resultant(p, q)), resultant_by_roots(p.lead(), roots, q));
}

TEST(Resultant, SwapSign) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        IntPoly p = random_poly(rng, 6, 9), q = random_poly(rng, 6, 9);
        BigInt s = (p.degree() * q.degree()) % 2 ? -1 : 1;
        EXPECT_EQ(resultant(p, q) * s, resultant(q, p));
    }
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(IntPoly{1, 0, 1}), -4);
    EXPECT_EQ(discriminant(IntPoly{-4, 0, 27}), 432);
    EXPECT_THROW(discriminant(IntPoly{5}), std::domain_error);
}

TEST(Discriminant, CubicExpansion) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 200; ++i) {
        BigInt a0 = coef(rng), a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
        if (a3 == 0) a3 = 7;
        BigInt expected = a1 * a1 * a2 * a2 - 4 * a1 * a1 * a1 * a3 - 4 * a0 * a2 * a2 * a2 - 27 * a0 * a0 * a3 * a3 +
                          18 * a0 * a1 * a2 * a3;
        EXPECT_EQ(discriminant(IntPoly(std::vector<BigInt>{a0, a1, a2, a3})), expected);
    }
}

TEST(Discriminant, ZeroIffRepeatedFactor) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        IntPoly p = random_poly(rng, 4, 5);
        if (i % 3 == 0) p = p * random_poly(rng, 2, 4).pow(2);
        if (p.degree() < 1) continue;
        bool zero = discriminant(p) == 0;
        bool shared = gcd(p, p.derivative()).degree() > 0;
        EXPECT_EQ(zero, shared) << p;
    }
}

TEST(Sturm, Examples) {
    EXPECT_EQ(sturm_count(IntPoly{1, 0, 1}), 0);
    EXPECT_EQ(sturm_count(IntPoly{-4, 0, 27}), 2);
    EXPECT_EQ(sturm_count(IntPoly{-2, 0, 0, 1}), 1);
    EXPECT_EQ(sturm_count(IntPoly{-4, 0, 27}, Rational(0), Rational(1)), 1);
    EXPECT_THROW(sturm_count(IntPoly{}), std::domain_error);
    EXPECT_THROW(sturm_count(IntPoly{1, 1}, Rational(1), Rational(0)), std::domain_error);
}

TEST(Isolation, Examples) {
    auto r = isolate_real_roots(IntPoly{-2, 0, 1});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_LT(r[0].hi, 0);
    EXPECT_GT(r[1].lo, 0);
    auto refined = refine(IntPoly{-2, 0, 1}, r[1], make_rational(1, 1000000));
    EXPECT_NEAR(refined.approx(), 1.41421356, 1e-6);

    auto q = isolate_real_roots(IntPoly{-1, 4});
    ASSERT_EQ(q.size(), 1u);
    EXPECT_LE(q[0].lo, make_rational(1, 4));
    EXPECT_GE(q[0].hi, make_rational(1, 4));

    auto pr = isolate_real_roots(IntPoly{-1, 4} * IntPoly{3, 4});
    ASSERT_EQ(pr.size(), 2u);
    EXPECT_TRUE(pr[0].lo <= make_rational(-3, 4) && make_rational(-3, 4) <= pr[0].hi);
    EXPECT_TRUE(pr[1].lo <= make_rational(1, 4) && make_rational(1, 4) <= pr[1].hi);
}

TEST(Isolation, AgreesWithSturm) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        IntPoly p = random_poly(rng, 8, 20);
        if (p.degree() < 1) continue;
        auto ivs = isolate_real_roots(p);
        EXPECT_EQ(static_cast<int>(ivs.size()), sturm_count(p)) << p;
        for (std::size_t k = 0; k + 1 < ivs.size(); ++k) EXPECT_LT(ivs[k].hi, ivs[k + 1].lo);
        for (const auto& iv : ivs) {
            if (iv.exact()) {
                EXPECT_EQ(p.sign_at(iv.lo), 0);
            } else {
                EXPECT_EQ(sturm_count(p, iv.lo, iv.hi), 1) << p;
            }
        }
    }
}

TEST(Factor, Examples) {
    auto f = factor_irreducible(IntPoly{-1, 0, 1});
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].first, (IntPoly{-1, 1}));
    EXPECT_EQ(f.factors[1].first, (IntPoly{1, 1}));

    auto g = factor_irreducible(IntPoly{-1, 3, 4});
    ASSERT_EQ(g.factors.size(), 2u);
    EXPECT_EQ(g.expand(), (IntPoly{-1, 3, 4}));
    EXPECT_TRUE((g.factors[0].first == IntPoly{-1, 4} && g.factors[1].first == IntPoly{1, 1}) ||
                (g.factors[1].first == IntPoly{-1, 4} && g.factors[0].first == IntPoly{1, 1}));

    auto h = factor_irreducible(IntPoly{-4, 0, 27});
    ASSERT_EQ(h.factors.size(), 1u);
    EXPECT_EQ(h.factors[0].first, (IntPoly{-4, 0, 27}));
}

TEST(Factor, HardCases) {
    // Swinnerton-Dyer style: T^4 - 10T^2 + 1 splits into quadratics mod every prime.
    auto sd = factor_irreducible(IntPoly{1, 0, -10, 0, 1});
    EXPECT_EQ(sd.factors.size(), 1u);
    // Cyclotomic Phi_105 has coefficient -2 and is irreducible of degree 48.
    IntPoly x105 = IntPoly::monomial(1, 105) - IntPoly{1};
    auto cyc = factor_irreducible(x105);
    EXPECT_EQ(cyc.factors.size(), 8u);  // divisors of 105
    EXPECT_EQ(cyc.expand(), x105);
    // Product of high-degree irreducibles with multiplicities and content.
    IntPoly a{3, 0, 1, 5}, b{-7, 2, 0, 0, 1}, c{1, 1, 1, 1, 1, 1, 1};
    IntPoly prod = IntPoly{-6} * a.pow(2) * b * c.pow(3);
    auto pf = factor_irreducible(prod);
    EXPECT_EQ(pf.expand(), prod);
    EXPECT_EQ(pf.unit, -6);
}

TEST(Factor, ReproducesInput) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 150; ++i) {
        IntPoly p = random_poly(rng, 4, 12) * random_poly(rng, 4, 12) * random_poly(rng, 3, 6);
        if (p.is_zero()) continue;
        auto f = factor_irreducible(p);
        EXPECT_EQ(f.expand(), p) << p;
        for (const auto& [q, m] : f.factors) {
            EXPECT_TRUE(q.is_canonical());
            if (q.degree() == 2 || q.degree() == 3) {
                // Independent check: no rational root.
                bool has_root = false;
                for (const auto& iv : isolate_real_roots(q)) has_root = has_root || iv.exact();
                EXPECT_FALSE(has_root) << q;
            }
        }
    }
}

TEST(Valuation, Examples) {
    EXPECT_EQ(poly_valuation(IntPoly{-1, 4}, 2), 0);
    EXPECT_EQ(poly_valuation(IntPoly{16, 4, 8}, 2), 2);
    EXPECT_EQ(poly_valuation(IntPoly{2, 2} * IntPoly{6, 4}, 2), 2);
    EXPECT_THROW(poly_valuation(IntPoly{1, 1}, 4), std::domain_error);
}

TEST(Valuation, GaussContentMultiplicative) {
    std::mt19937_64 rng(1000);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        IntPoly p = random_poly(rng, 5, 200), q = random_poly(rng, 5, 200);
        for (long prime : {2L, 3L, 5L}) {
            EXPECT_EQ(poly_valuation(p * q, prime), poly_valuation(p, prime) + poly_valuation(q, prime));
        }
        ++checked;
    }
    EXPECT_EQ(checked, 1000);
}

TEST(Json, PolynomialRoundTrip) {
    IntPoly p{-1, 4};
    EXPECT_EQ(to_json(p).dump(), R"(["-1","4"])");
    EXPECT_EQ(poly_from_json(Json::parse(R"(["-4","0","27"])")), (IntPoly{-4, 0, 27}));
}
