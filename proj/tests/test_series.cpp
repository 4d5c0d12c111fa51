#include "hodge/combinatorics.hpp"
#include "hodge/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hodge;

namespace {

GaussRat q(long p, long d = 1) { return GaussRat(make_rational(p, d)); }

Series random_series(std::mt19937& rng, int start, int order, bool complex = true)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<GaussRat> c;
    for (int k = start; k < order; ++k) {
        Rational re = make_rational(num(rng), den(rng));
        Rational im = complex ? make_rational(num(rng), den(rng)) : Rational(0);
        c.emplace_back(re, im);
    }
    return Series::from_coefficients(start, c, order);
}

} // namespace

TEST(Series, ExpLinear)
{
    EXPECT_EQ(exp_linear(0, 6), Series::constant(1, 6));
    const Series e = exp_linear(1, 8);
    for (int k = 0; k < 8; ++k) EXPECT_EQ(e.coefficient(k), GaussRat(Rational(1) / Rational(factorial(k))));
    EXPECT_THROW(e.coefficient(8), ArgumentError);
}

TEST(Series, Varsigma)
{
    const Series v = varsigma_series(1, 7);
    EXPECT_EQ(v.valuation(), 1);
    EXPECT_EQ(v.coefficient(1), q(1));
    EXPECT_EQ(v.coefficient(2), q(0));
    EXPECT_EQ(v.coefficient(3), q(1, 24));
    EXPECT_EQ(v.coefficient(5), q(1, 1920));
}

TEST(Series, GeometricInverse)
{
    const Series one_minus_u = Series::from_coefficients(0, {q(1), q(-1)}, 10);
    const Series inv = one_minus_u.inverse();
    EXPECT_EQ(inv.order(), 10);
    for (int k = 0; k < 10; ++k) EXPECT_EQ(inv.coefficient(k), q(1));
    EXPECT_THROW(Series(5).inverse(), ArgumentError);
}

TEST(Series, InverseOfLaurentTracksOrder)
{
    // u^2 (1 + ...) known through u^5 -> inverse known through u^{1}
    const Series s = Series::from_coefficients(2, {q(1), q(3), q(1, 2), q(2)}, 6);
    const Series inv = s.inverse();
    EXPECT_EQ(inv.valuation(), -2);
    EXPECT_EQ(inv.order(), 2);
    const Series prod = s * inv;
    EXPECT_EQ(prod.order(), 4);
    EXPECT_EQ(prod, Series::constant(1, 4));
}

TEST(Series, LogOfS)
{
    const Series s = S_series(1, 8);
    EXPECT_EQ(s.coefficient(2), q(1, 24));
    EXPECT_EQ(s.coefficient(4), q(1, 1920));
    const Series l = s.log();
    EXPECT_EQ(l.coefficient(2), q(1, 24));
    EXPECT_EQ(l.coefficient(4), q(-1, 2880));
    for (int k = 1; 2 * k < 8; ++k)
        EXPECT_EQ(l.coefficient(2 * k), GaussRat(bernoulli(2 * k) / Rational(2 * k * factorial(2 * k))));
    EXPECT_THROW(exp_linear(1, 5).shifted(1).log(), ArgumentError);
}

TEST(Series, SAtZeroAndVarsigmaIdentity)
{
    EXPECT_EQ(S_series(0, 6), Series::constant(1, 6));
    for (const GaussRat& c : {q(3), q(-2, 5), GaussRat(make_rational(1, 2), make_rational(-3))}) {
        const Series lhs = varsigma_series(c, 9);
        const Series rhs = (S_series(c, 8) * c).shifted(1);
        EXPECT_TRUE(agree(lhs, rhs));
        EXPECT_EQ(rhs.order(), 9);
    }
}

TEST(Series, ConjITwiceIsNegation)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Series s = random_series(rng, -3, 6);
        EXPECT_EQ(s.conj_i().conj_i(), s.rescaled(-1));
    }
}

TEST(Series, SinKernel)
{
    const Series k1 = sin_kernel(1, 5);
    EXPECT_EQ(k1.valuation(), -2);
    EXPECT_EQ(k1.order(), 5);
    EXPECT_EQ(k1.coefficient(-2), q(1));
    EXPECT_EQ(k1.coefficient(0), q(1, 24));
    EXPECT_EQ(k1.coefficient(2), q(7, 5760));
    EXPECT_EQ(k1.coefficient(1), q(0));

    const Series k2 = sin_kernel(2, 3);
    EXPECT_EQ(k2.coefficient(-2), q(1, 2));
    EXPECT_EQ(k2.coefficient(0), q(1, 12));
    for (int d = 1; d <= 4; ++d) {
        const Series k = sin_kernel(d, 9);
        EXPECT_TRUE(k.is_real());
        EXPECT_TRUE(k.has_parity(0));
    }
}

TEST(Series, RingLaws)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, -2, 5);
        const Series b = random_series(rng, 0, 7);
        const Series c = random_series(rng, 1, 6);
        EXPECT_TRUE(agree((a * b) * c, a * (b * c)));
        EXPECT_TRUE(agree(a * (b + c), a * b + a * c));
        EXPECT_TRUE(agree(a * b, b * a));
        EXPECT_EQ((a * b).order(), std::min(a.order() + b.valuation(), b.order() + a.valuation()));
    }
}

TEST(Series, ExpLogRoundTrip)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Series f = random_series(rng, 1, 8);
        EXPECT_EQ(f.exp().log(), f);
        const Series g = Series::constant(1, 8) + random_series(rng, 1, 8);
        EXPECT_EQ(g.log().exp(), g);
    }
}

TEST(Series, JsonRoundTrip)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Series s = random_series(rng, -4, 4);
        const nlohmann::json j = to_json(s);
        EXPECT_EQ(series_from_json(j), s);
        EXPECT_EQ(series_from_json(nlohmann::json::parse(j.dump())), s);
    }
    const nlohmann::json z = to_json(Series(3));
    EXPECT_EQ(z.at("valuation"), 3);
    EXPECT_EQ(series_from_json(z), Series(3));
    EXPECT_EQ(to_json(sin_kernel(1, 1)).at("coefficients")[1][1], "1/24");
}
