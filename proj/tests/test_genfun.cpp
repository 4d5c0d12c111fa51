#include "hodge/genfun.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hodge;

namespace {

GaussRat q(long p, long d = 1) { return GaussRat(make_rational(p, d)); }

// cosh(c u) and sinh(c u) through u^{order-1}
Series cosh_series(const Rational& c, int order)
{
    return (exp_linear(c, order) + exp_linear(-c, order)) / GaussRat(2);
}

Series sinh_series(const Rational& c, int order)
{
    return (exp_linear(c, order) - exp_linear(-c, order)) / GaussRat(2);
}

Series random_series(std::mt19937& rng, int start, int order)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<GaussRat> c;
    for (int k = start; k < order; ++k) c.emplace_back(make_rational(num(rng), 3), make_rational(num(rng), 2));
    return Series::from_coefficients(start, c, order);
}

} // namespace

TEST(QDim, SingleBoxAndTwoBoxes)
{
    const QDim one = qdim_series(Partition({1}), 6);
    EXPECT_EQ(one.series.valuation(), -1);
    EXPECT_EQ(one.series.coefficient(-1), q(1));
    EXPECT_EQ(one.series.coefficient(1), q(-1, 24));
    EXPECT_EQ(one.series.coefficient(3), q(7, 5760));

    const Series two = qdim_series(Partition({2}), 5).series;
    const Series oracle = (sinh_series(make_rational(1, 2), 9) * sinh_series(1, 9) * GaussRat(4)).inverse();
    EXPECT_EQ(two.valuation(), -2);
    EXPECT_TRUE(agree(two, oracle));
    EXPECT_EQ(qdim_series(Partition(), 4).series, Series::constant(1, 4));
}

TEST(QDim, LeadingCoefficientIsInverseHookProduct)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lam : partitions(n)) {
            const Series s = qdim_series(lam, 2).series;
            EXPECT_EQ(s.valuation(), -n);
            EXPECT_EQ(s.coefficient(-n), GaussRat(ratio(1, hook_product(lam))));
            EXPECT_TRUE(s.is_real());
        }
    }
}

TEST(Elsv, HandExpansions)
{
    EXPECT_EQ(elsv_rhs(Partition({1}), 8), Series::monomial(1, -2, 8));

    const Series two = elsv_rhs(Partition({2}), 6) * GaussRat(elsv_prefactor(Partition({2})));
    EXPECT_TRUE(agree(two, sinh_series(1, 9).shifted(-3)));
    // genus-one piece (z^2 - z)/24 at z = 2
    EXPECT_EQ(elsv_rhs(Partition({2}), 6).coefficient(-1), q(0));
    EXPECT_EQ(elsv_rhs(Partition({2}), 6).coefficient(0), q(1, 12));

    // the (1,1) case fixes the convention: no 1/|Aut| factor
    const Series pair = elsv_rhs(Partition({1, 1}), 6);
    EXPECT_EQ(pair, require_order(cosh_series(1, 10).shifted(-4), 6, "oracle"));
    EXPECT_EQ(pair.coefficient(-4), q(1));
    EXPECT_EQ(pair.coefficient(-2), q(1, 2));
}

TEST(Gmv, SingleBox)
{
    for (const Rational& a : {make_rational(1), make_rational(2), make_rational(-3, 2), make_rational(5, 7)}) {
        const Series s = gmv_rhs(Partition({1}), a, 7);
        const Series oracle = (sinh_series(make_rational(1, 2), 12) * GaussRat(2)).inverse().shifted(-1) /
                              GaussRat(a * (a + 1));
        EXPECT_TRUE(agree(s, oracle));
        EXPECT_EQ(s.coefficient(-2), GaussRat(1 / (a * (a + 1))));
    }
    EXPECT_THROW(gmv_rhs(Partition({1}), 0, 4), ArgumentError);
    EXPECT_THROW(gmv_rhs(Partition({1}), -1, 4), ArgumentError);
}

TEST(Gmv, SymmetryUnderAToMinusAMinusOne)
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions(n))
            for (long a : {1, 2, 3}) EXPECT_EQ(gmv_rhs(mu, a, 6), gmv_rhs(mu, -a - 1, 6)) << mu << " a=" << a;
}

TEST(Gmv, LargeALimitRecoversElsv)
{
    // prod binom * a^l * [u^k] gmv_rhs is a polynomial in a of degree k + |mu| + l;
    // its top coefficient times prod(mu^mu/mu!)^{-1} is the ELSV coefficient.
    for (int n = 1; n <= 3; ++n) {
        for (const auto& mu : partitions(n)) {
            const int len = mu.length();
            const Series target = elsv_rhs(mu, 4);
            for (int k = target.valuation(); k < 4; ++k) {
                const int degree = k + n + len;
                if (degree < 0) continue;
                // finite differences of order `degree` give degree! * leading coefficient
                Rational diff = 0;
                for (int i = 0; i <= degree; ++i) {
                    const Rational a = 1 + i;
                    const Rational value = gmv_prefactor(mu, a) * pow(a, len) * gmv_rhs(mu, a, 4).coefficient(k).re();
                    diff += Rational(sign_power(degree - i) * binomial(degree, i)) * value;
                }
                const Rational lead = diff / Rational(factorial(degree));
                EXPECT_EQ(lead, target.coefficient(k).re() * elsv_prefactor(mu)) << mu << " k=" << k;
            }
        }
    }
}

TEST(Connected, TwoPointsAndRoundTrip)
{
    std::mt19937 rng(11);
    for (int n = 1; n <= 4; ++n) {
        SubsetFamily disc;
        for (std::uint32_t s = 1; s < (1u << n); ++s) disc.emplace(s, random_series(rng, -2, 5));
        const SubsetFamily conn = disconnected_to_connected(disc, n);
        const SubsetFamily back = connected_to_disconnected(conn, n);
        for (const auto& [mask, value] : disc) EXPECT_TRUE(agree(back.at(mask), value));
        if (n == 2) {
            EXPECT_TRUE(agree(disc.at(3), conn.at(3) + conn.at(1) * conn.at(2)));
        }
    }
    SubsetFamily partial;
    partial.emplace(1, Series::constant(1, 3));
    EXPECT_THROW(disconnected_to_connected(partial, 2), ArgumentError);
}

TEST(Connected, ElsvTwoPoint)
{
    const Series c = connected_series({{1, 1}, Flavor::linear()}, 4);
    EXPECT_EQ(c.valuation(), -2);
    EXPECT_EQ(c.coefficient(-2), q(1, 2));
    EXPECT_EQ(c.coefficient(0), q(1, 24));
    EXPECT_EQ(c.coefficient(2), q(1, 720));
}

TEST(Connected, ParityAndReality)
{
    for (const std::vector<int>& args : {std::vector<int>{3}, {2, 1}, {2, 2, 1}, {1, 1, 1}}) {
        const Series lin = connected_series({args, Flavor::linear()}, 5);
        EXPECT_TRUE(lin.has_parity(0));
        EXPECT_TRUE(lin.is_real());
        EXPECT_GE(lin.valuation(), -2);
        const Series cub = connected_series({args, Flavor::cubic(2)}, 5);
        EXPECT_TRUE(cub.has_parity(0));
        EXPECT_TRUE(cub.is_real());
        EXPECT_GE(cub.valuation(), -2);
    }
}

TEST(Connected, GenusOneLinearPolynomial)
{
    // [u^0] of the 1-point connected series is (z^2 - z)/24
    for (int z = 1; z <= 6; ++z)
        EXPECT_EQ(connected_series({{z}, Flavor::linear()}, 1).coefficient(0), GaussRat(make_rational(z * z - z, 24)));
}

TEST(ZeroPoint, GenusTwo)
{
    EXPECT_EQ(zero_point_cubic(2, 1, 1, 1), make_rational(1, 720));
    // (t1 t2 t3)^{1} coefficient: evaluate the polynomial on t = (1,1,1) minus the non-diagonal monomials
    const Rational bern = make_rational(1, 120) * make_rational(1, 12) / 2;
    EXPECT_EQ(bern, make_rational(1, 2880));
    EXPECT_EQ(zero_point_cubic(2, 1, 0, 0), 0);
    // t1^2 t2 alone: only one permutation monomial survives
    EXPECT_EQ(zero_point_cubic(2, 1, 1, 0), make_rational(1, 5760) * 2);
    EXPECT_THROW(zero_point_cubic(1, 1, 1, 1), ArgumentError);
}

TEST(LambdaG, Values)
{
    EXPECT_EQ(lam_g_value(1, {0}), make_rational(1, 24));
    EXPECT_EQ(lam_g_value(2, {2}), make_rational(7, 5760));
    EXPECT_EQ(lam_g_value(2, {1, 2}), make_rational(7, 1920));
    EXPECT_EQ(lam_g_value(2, {2, 1}), make_rational(7, 1920));
    // off the dimension constraint
    EXPECT_EQ(lam_g_value(2, {0, 2}), 0);
    EXPECT_EQ(lam_g_value(2, {1}), 0);
}

TEST(RFunction, ProductAgreesWithBernoulliForm)
{
    for (long a : {1, 2, -3})
        for (int z = 1; z <= 4; ++z)
            EXPECT_EQ(R_series_product(z, a, 9), R_series_bernoulli(z, a, 9)) << z << ' ' << a;
    EXPECT_EQ(R_series(1, 2, 7), S_series(2, 7) / S_series(1, 7));
    for (const Rational& z : {make_rational(1, 2), make_rational(-5, 3)})
        EXPECT_EQ(R_series(z, make_rational(2, 7), 6).coefficient(0), q(1));
}

TEST(OnePoint, MatchesCharacterSum)
{
    for (long a : {1, 2})
        for (int m = 1; m <= 4; ++m) EXPECT_EQ(one_point_cubic(m, a, 7), gmv_rhs(Partition({m}), a, 7)) << m;
    const Rational a = make_rational(3, 5);
    EXPECT_EQ(one_point_cubic(3, a, 4).coefficient(-2), GaussRat(1 / (a * (a + 1) * 3)));
    EXPECT_THROW(one_point_cubic(2, -1, 4), ArgumentError);
}
