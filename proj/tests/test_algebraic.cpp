#include "multibrot/algebraic/algebraic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace multibrot;
using namespace multibrot::algebraic;
using exact::make_rational;

namespace {

AlgebraicNumber positive_root(const IntPoly& p) {
    for (auto& r : AlgebraicNumber::real_roots_of(p))
        if (r.sign() > 0) return r;
    throw std::runtime_error("no positive root");
}

}  // namespace

TEST(TotallyReal, Examples) {
    EXPECT_TRUE(is_totally_real(positive_root(IntPoly{-4, 0, 27})));
    EXPECT_FALSE(is_totally_real(IntPoly{1, 0, 1}));
    EXPECT_TRUE(is_totally_real(AlgebraicNumber(make_rational(1, 4))));
}

TEST(ConjugatesInInterval, Examples) {
    EXPECT_TRUE(conjugates_in_interval(AlgebraicNumber(Rational(-1)), Rational(-2), Rational(0)));
    EXPECT_FALSE(conjugates_in_interval(IntPoly{1, 3, 1}, Rational(-2), Rational(0)));
    EXPECT_TRUE(conjugates_in_interval(AlgebraicNumber(Rational(-2)), Rational(-2), Rational(0)));
    EXPECT_FALSE(conjugates_in_interval(IntPoly{1, 0, 1}, Rational(-2), Rational(2)));
}

TEST(ScaledMinpoly, Examples) {
    EXPECT_EQ(scaled_minpoly(AlgebraicNumber(make_rational(1, 4)), Rational(4)), (IntPoly{-1, 1}));
    EXPECT_EQ(scaled_minpoly(AlgebraicNumber(make_rational(-3, 4)), Rational(4)), (IntPoly{3, 1}));
    AlgebraicNumber a = positive_root(IntPoly{-4, 0, 27});
    AlgebraicNumber s = positive_root(IntPoly{-27, 0, 1});
    EXPECT_EQ(scaled_minpoly(a, s), (IntPoly{-2, 1}));
    EXPECT_THROW(scaled_minpoly(a, Rational(0)), std::domain_error);
    // sqrt2 * sqrt3 = sqrt6
    EXPECT_EQ(scaled_minpoly(positive_root(IntPoly{-2, 0, 1}), positive_root(IntPoly{-3, 0, 1})), (IntPoly{-6, 0, 1}));
}

TEST(RootValuations, Examples) {
    EXPECT_EQ(root_valuations(IntPoly{-4, 0, 27}, 3), (std::vector<Rational>{make_rational(-3, 2), make_rational(-3, 2)}));
    EXPECT_EQ(root_valuations(IntPoly{-2, 0, 1}, 2), (std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)}));
    EXPECT_EQ(root_valuations(IntPoly{-1, 4}, 2), (std::vector<Rational>{Rational(-2)}));
}

TEST(RootValuations, SumMatchesEndCoefficients) {
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<long> coef(-3000, 3000);
    std::uniform_int_distribution<int> deg(1, 9);
    for (int i = 0; i < 500; ++i) {
        int n = deg(rng);
        std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
        for (auto& v : c) v = coef(rng);
        if (c.front() == 0) c.front() = 12;
        if (c.back() == 0) c.back() = -40;
        IntPoly p(std::move(c));
        for (long prime : {2L, 3L, 5L}) {
            NewtonPolygon np(p, prime);
            EXPECT_EQ(np.length(), n);
            Rational sum = 0;
            for (const auto& v : np.root_valuations()) sum += v;
            EXPECT_EQ(sum, Rational(exact::valuation(p[0], prime) - exact::valuation(p.lead(), prime)));
            for (std::size_t k = 1; k < np.segments().size(); ++k)
                EXPECT_LT(np.segments()[k - 1].slope(), np.segments()[k].slope());
        }
    }
}

TEST(MilnorUnit, Examples) {
    EXPECT_TRUE(is_milnor_unit(AlgebraicNumber(make_rational(1, 4)), 2));
    EXPECT_TRUE(is_milnor_unit(positive_root(IntPoly{-4, 0, 27}), 3));
    EXPECT_FALSE(is_milnor_unit(AlgebraicNumber(make_rational(1, 2)), 2));
    EXPECT_TRUE(is_milnor_unit(AlgebraicNumber(make_rational(-7, 4)), 2));
    // 4c = -6 is even, so not coprime to 2
    EXPECT_FALSE(is_milnor_unit(AlgebraicNumber(make_rational(-3, 2)), 2));
    // c = 1/5 with d = 2: 4c is not an integer
    auto m = milnor_check(IntPoly{-1, 5}, 2);
    EXPECT_FALSE(m.integral);
}

TEST(MilnorUnit, AgreesWithScaledMinpolyWhenRational) {
    // d = 2 and d = 3: d^(d/(d-1)) is 4 and 3^(3/2); compare with the
    // direct Newton-polygon formulation on u = d^(d/(d-1)) c.
    for (long num = -20; num <= 20; ++num) {
        if (num == 0) continue;
        for (long den : {1L, 2L, 4L, 8L, 3L}) {
            Rational c = make_rational(num, den);
            IntPoly u = scaled_minpoly(AlgebraicNumber(c), Rational(4));
            bool direct = u.lead() == 1 && root_valuations(u, 2) == std::vector<Rational>{Rational(0)};
            EXPECT_EQ(is_milnor_unit(AlgebraicNumber(c), 2), direct) << c;
        }
    }
    AlgebraicNumber s = positive_root(IntPoly{-27, 0, 1});
    for (const auto& p : {IntPoly{-4, 0, 27}, IntPoly{16, 0, 27}, IntPoly{-1, 0, 27}, IntPoly{-8, 0, 27}}) {
        for (auto& c : AlgebraicNumber::real_roots_of(p)) {
            IntPoly u = scaled_minpoly(c, s);
            bool unit = true;
            for (const auto& v : root_valuations(u, 3)) unit = unit && v == 0;
            bool direct = u.lead() == 1 && unit;
            EXPECT_EQ(is_milnor_unit(c, 3), direct) << p;
        }
    }
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(is_root_of_unity(IntPoly{1, 1, 1}), 3u);
    EXPECT_EQ(is_root_of_unity(IntPoly{1, 0, 1}), 4u);
    EXPECT_EQ(is_root_of_unity(IntPoly{1, -3, 1}), std::nullopt);
}

TEST(RootOfUnity, CrossCheckByDivision) {
    for (unsigned m = 1; m <= 24; ++m) {
        IntPoly phi = cyclotomic(m);
        auto order = is_root_of_unity(phi);
        ASSERT_TRUE(order.has_value());
        EXPECT_EQ(*order, m);
        for (unsigned k = 1; k <= 24; ++k) {
            bool divides = exact::divide_exact(IntPoly::monomial(1, k) - IntPoly{1}, phi, nullptr);
            EXPECT_EQ(divides, k % m == 0) << m << " " << k;
        }
    }
}

TEST(ArcUnitImages, Examples) {
    auto twelve = arc_unit_images(12);
    ASSERT_EQ(twelve.size(), 3u);
    EXPECT_EQ(twelve[0].rational_value(), -2);
    EXPECT_EQ(twelve[1].rational_value(), -1);
    EXPECT_EQ(twelve[2].rational_value(), 0);
    EXPECT_TRUE(arc_unit_images(1).empty());
    auto two = arc_unit_images(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].rational_value(), -2);
    // m = 5: 2 cos 72 degrees > 0
    EXPECT_FALSE(conjugates_in_interval(real_cyclotomic(5), Rational(-2), Rational(0)));
}

TEST(ComplexRoots, CertifiedBoxes) {
    auto boxes = isolate_complex_roots(IntPoly{16, 0, 27});
    ASSERT_EQ(boxes.size(), 2u);
    for (const auto& b : boxes) {
        EXPECT_FALSE(b.meets_real_axis());
        EXPECT_NEAR(std::abs(b.center().imag()), 4.0 / std::sqrt(27.0), 1e-12);
    }
    auto cyc = isolate_complex_roots(cyclotomic(105));
    EXPECT_EQ(cyc.size(), 48u);
    for (const auto& b : cyc) EXPECT_NEAR(std::abs(b.center()), 1.0, 1e-12);
    auto mixed = AlgebraicNumber::roots_of(IntPoly{-2, 0, 0, 1});
    ASSERT_EQ(mixed.size(), 3u);
    EXPECT_TRUE(mixed[0].is_real());
    EXPECT_FALSE(mixed[1].is_real());
    EXPECT_TRUE(mixed[1] == mixed[1]);
    EXPECT_FALSE(mixed[1] == mixed[2]);
}

TEST(AlgebraicNumber, JsonRoundTrip) {
    AlgebraicNumber a = positive_root(IntPoly{-4, 0, 27});
    auto j = a.to_json();
    EXPECT_EQ(j["minpoly"].dump(), R"(["-4","0","27"])");
    EXPECT_TRUE(AlgebraicNumber::from_json(j) == a);
}

TEST(AlgebraicNumber, JsonRoundTripComplex) {
    auto roots = AlgebraicNumber::roots_of(IntPoly{16, 0, 27});
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& r : roots) {
        Json j = r.to_json();
        ASSERT_TRUE(j["locator"].is_array());
        ASSERT_EQ(j["locator"].size(), 2u);
        AlgebraicNumber back = AlgebraicNumber::from_json(Json::parse(j.dump()));
        EXPECT_TRUE(back == r);
        EXPECT_FALSE(back == (r == roots[0] ? roots[1] : roots[0]));
    }
}
