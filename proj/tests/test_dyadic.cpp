#include "multibrot/exact/dyadic.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace multibrot::exact;

TEST(Dyadic, RootEnclosesTrueValue) {
    for (unsigned long k = 2; k <= 12; ++k) {
        auto r = DyadicInterval::exact(2, 128).root(k);
        // r^k must enclose 2 exactly
        auto back = r.pow(k);
        EXPECT_TRUE(back.contains(Rational(2)));
        EXPECT_LT(r.width(), make_rational(BigInt(1), BigInt(1) << 100));
        EXPECT_NEAR(r.approx(), std::pow(2.0, 1.0 / static_cast<double>(k)), 1e-15);
    }
}

TEST(Dyadic, ExactRoot) {
    auto r = DyadicInterval::from_rational(make_rational(1, 16), 64).root(4);
    EXPECT_TRUE(r.contains(make_rational(1, 2)));
    EXPECT_EQ(r.lo_rational(), make_rational(1, 2));
}

TEST(Dyadic, RationalEnclosure) {
    Rational third = make_rational(1, 3);
    auto t = DyadicInterval::from_rational(third, 80);
    EXPECT_TRUE(t.contains(third));
    EXPECT_LT(t.width(), make_rational(BigInt(1), BigInt(1) << 78));
    auto inv = t.reciprocal();
    EXPECT_TRUE(inv.contains(Rational(3)));
    auto neg = DyadicInterval::from_rational(-third, 80);
    EXPECT_TRUE(neg.contains(-third));
}

TEST(Dyadic, Ln2) {
    auto l = ln2_enclosure(128);
    EXPECT_NEAR(l.approx(), std::log(2.0), 1e-15);
    EXPECT_LT(l.width(), make_rational(BigInt(1), BigInt(1) << 120));
}
