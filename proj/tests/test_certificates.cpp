#include "multibrot/certificates/theorems.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace multibrot;
using namespace multibrot::certificates;
using exact::make_rational;

namespace {

// Delta of a cubic by the Sylvester determinant, independent of the closed form.
BigInt sylvester_cubic_discriminant(const IntPoly& p) {
    IntPoly dp = p.derivative();
    std::vector<std::vector<Rational>> m(5, std::vector<Rational>(5, 0));
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k <= 3; ++k) m[r][r + k] = Rational(p[static_cast<std::size_t>(3 - k)]);
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k <= 2; ++k) m[2 + r][r + k] = Rational(dp[static_cast<std::size_t>(2 - k)]);
    Rational det = 1;
    for (int c = 0; c < 5; ++c) {
        int piv = c;
        while (piv < 5 && m[piv][c] == 0) ++piv;
        if (piv == 5) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 5; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
        }
    }
    // Res(P, P') = (-1)^(n(n-1)/2) a_n Delta with n = 3
    Rational disc = -det / Rational(p.lead());
    return disc.get_num();
}

const Json* step(const Json& report, const std::string& id) {
    for (const auto& s : report["steps"])
        if (s["id"] == id) return &s;
    return nullptr;
}

}  // namespace

TEST(LeadingCoefficient, Examples) {
    EXPECT_TRUE(leading_coeff_check(IntPoly{-1, 4}, 2).ok());
    EXPECT_TRUE(leading_coeff_check(IntPoly{-4, 0, 27}, 3).ok());
    EXPECT_EQ(required_leading_coefficient(3, 4), BigInt(256));
    EXPECT_EQ(leading_coeff_check(IntPoly{-1, 2}, 2).status, CheckStatus::fail);
    EXPECT_EQ(leading_coeff_check(IntPoly{1, 0, 1}, 4).status, CheckStatus::not_integer);
}

TEST(LeadingCoefficient, IntegralExactlyWhenExponentIs) {
    for (unsigned d = 2; d <= 12; ++d)
        for (unsigned n = 1; n <= 12; ++n) {
            auto want = required_leading_coefficient(n, d);
            // d^(nd/(d-1)) is an integer iff (d-1) divides n * v_p(d) for every p | d
            bool integral = true;
            for (const auto& [p, e] : exact::factor_small(d)) integral = integral && (n * d * e) % (d - 1) == 0;
            ASSERT_EQ(want.has_value(), integral) << d << " " << n;
            if (!want) continue;
            // want^(d-1) = d^(nd)
            EXPECT_EQ(exact::pow(*want, d - 1), exact::pow(BigInt(d), n * d)) << d << " " << n;
        }
}

TEST(Valuation, Examples) {
    auto r = valuation_check(IntPoly{-4, 0, 27}, 3);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.witness["primes"][0]["root_valuations"], (Json{"-3/2", "-3/2"}));
    EXPECT_TRUE(valuation_check(IntPoly{-1, 4}, 2).ok());
    auto m34 = valuation_check(IntPoly{3, 4}, 2);
    EXPECT_TRUE(m34.ok());
    bool saw3 = false;
    for (const auto& p : m34.witness["primes"])
        if (p["p"] == "3") {
            saw3 = true;
            EXPECT_EQ(p["root_valuations"], (Json{"1"}));
        }
    EXPECT_TRUE(saw3);
    EXPECT_FALSE(valuation_check(IntPoly{-1, 2}, 2).ok());
    // 1/5 has v_5 = -1 < 0
    EXPECT_FALSE(valuation_check(IntPoly{-1, 20}, 2).ok());
}

TEST(Discriminant, Examples) {
    auto r = discriminant_bound_check(IntPoly{-4, 0, 27}, 3);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.witness["discriminant"], "432");
    EXPECT_EQ(r.witness["a_n^(n-1)"], "27");
    auto lin = discriminant_bound_check(IntPoly{-1, 4}, 2);
    EXPECT_TRUE(lin.ok());
    EXPECT_EQ(lin.witness["a_n^(n-1)"], "1");
    auto ub = capacity::discriminant_upper_bound(BigInt(256), 4, 3, 256);
    EXPECT_TRUE(ub.certainly_less(Rational(BigInt(1) << 17)));
}

TEST(Case4, Examples) {
    Json rep = case4_residue_certificate().to_json();
    EXPECT_EQ(rep["verdict"], "pass");
    const Json* table = step(rep, "residue-table");
    ASSERT_NE(table, nullptr);
    ASSERT_EQ((*table)["witness"]["rows"].size(), 16u);
    const std::string five = exact::to_string(BigInt(BigInt(5) << 16));
    for (const auto& row : (*table)["witness"]["rows"]) EXPECT_EQ(row["delta_mod_2^19"], five);
    const Json* concl = step(rep, "conclusion");
    ASSERT_NE(concl, nullptr);
    EXPECT_EQ((*concl)["claim"], "such P does not exist");
    EXPECT_EQ((*concl)["verdict"], "pass");
}

TEST(Case4, ClosedFormMatchesSylvesterOnRandomLifts) {
    // any integer cubic 2^8 T^3 + 64v T^2 + 8u T + a0 with a0 odd
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> w(-5000, 5000);
    const BigInt mod = BigInt(1) << 19;
    for (int i = 0; i < 300; ++i) {
        long a0 = 2 * w(rng) + 1, u = w(rng), v = w(rng);
        IntPoly p(std::vector<BigInt>{BigInt(a0), BigInt(8 * u), BigInt(64 * v), BigInt(256)});
        BigInt disc = sylvester_cubic_discriminant(p);
        EXPECT_EQ(disc, exact::discriminant(p));
        BigInt r = disc % mod;
        if (r < 0) r += mod;
        EXPECT_EQ(r, BigInt(BigInt(5) << 16)) << a0 << " " << u << " " << v;
    }
}

TEST(Case4, Deterministic) {
    EXPECT_EQ(case4_residue_certificate().to_json().dump(), case4_residue_certificate().to_json().dump());
}

TEST(PcfDriver, Examples) {
    Json rep = theorem_11_driver(2, 9).to_json();
    EXPECT_EQ(rep["verdict"], "pass");
    EXPECT_EQ(rep["result"]["2"], (Json{"-2", "-1", "0"}));
    EXPECT_EQ(rep["result"]["4"], (Json{"-1", "0"}));
    EXPECT_EQ(rep["result"]["3"], (Json{"0"}));
    for (unsigned d = 5; d <= 9; ++d)
        EXPECT_EQ(rep["result"][std::to_string(d)], (d % 2 ? Json{"0"} : Json{"-1", "0"})) << d;
    EXPECT_THROW(theorem_11_driver(1, 3), std::invalid_argument);
}

TEST(QuadraticParabolicDriver, Examples) {
    auto report = theorem_12_driver();
    Json rep = report.to_json();
    EXPECT_EQ(rep["verdict"], "pass");
    EXPECT_EQ(rep["result"]["members"], (Json{"-7/4", "-5/4", "-3/4", "1/4"}));
    const Json* audit = step(rep, "audit--7/4");
    ASSERT_NE(audit, nullptr);
    EXPECT_EQ((*audit)["verdict"], "pass");
    const Json* neg = step(rep, "negative-control");
    ASSERT_NE(neg, nullptr);
    EXPECT_EQ((*neg)["verdict"], "pass");
}

TEST(ParabolicDriver, Examples) {
    Json rep = theorem_13_driver(3, 6, 3).to_json();
    EXPECT_EQ(rep["verdict"], "pass");
    ASSERT_EQ(rep["result"]["3"].size(), 2u);
    for (const auto& m : rep["result"]["3"]) EXPECT_EQ(m["minpoly"], (Json{"-4", "0", "27"}));
    EXPECT_TRUE(rep["result"]["4"].empty());
    EXPECT_TRUE(rep["result"]["5"].empty());
    EXPECT_TRUE(rep["result"]["6"].empty());
    EXPECT_NE(step(rep, "case4-residue-table"), nullptr);
    const Json* odd5 = step(rep, "odd-d5");
    ASSERT_NE(odd5, nullptr);
    EXPECT_EQ((*odd5)["witness"]["real_roots"], 2);
    EXPECT_EQ((*odd5)["witness"]["degree"], 4);
    EXPECT_THROW(theorem_13_driver(2, 4, 3), std::invalid_argument);
}

TEST(Report, VerdictIsConjunctionOfSteps) {
    CertificateReport r("t", Json::object());
    EXPECT_FALSE(r.pass());
    Step a;
    a.id = "a";
    a.pass = true;
    r.add(a);
    EXPECT_TRUE(r.pass());
    Step b;
    b.id = "b";
    b.pass = false;
    r.add(b);
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.to_json()["verdict"], "fail");
}

TEST(Discriminant, DivisibilityHoldsForComputedParabolicParameters) {
    for (auto [d, n_max] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{4u, 2u}})
        for (unsigned n = 1; n <= n_max; ++n)
            for (int lambda : {1, -1})
                for (const auto& c : parabolic::solve_parabolic(d, n, lambda)) {
                    auto r = discriminant_bound_check(c.parameter.minpoly(), d);
                    EXPECT_TRUE(r.ok()) << d << " " << c.parameter.minpoly() << " " << r.witness.dump();
                }
}
