#include "hodge/combinatorics.hpp"
#include "hodge/series.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hodge;

namespace {

// Partition counts from the coin-change recurrence.
long partition_count(int n)
{
    std::vector<long> ways(static_cast<std::size_t>(n + 1), 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(n)];
}

// Standard Young tableaux counted by removing the box holding the largest entry.
long count_syt(std::vector<int> shape, std::map<std::vector<int>, long>& memo)
{
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = (i + 1 == shape.size()) || shape[i + 1] < shape[i];
        if (!corner) continue;
        std::vector<int> smaller = shape;
        --smaller[i];
        total += count_syt(smaller, memo);
    }
    memo[shape] = total;
    return total;
}

int multiplicity(const Partition& mu, int value)
{
    int m = 0;
    for (int p : mu.parts()) m += (p == value);
    return m;
}

} // namespace

TEST(Partitions, SmallCases)
{
    ASSERT_EQ(partitions(0).size(), 1u);
    EXPECT_TRUE(partitions(0)[0].empty());
    const auto& p3 = partitions(3);
    ASSERT_EQ(p3.size(), 3u);
    EXPECT_EQ(p3[0], Partition({3}));
    EXPECT_EQ(p3[1], Partition({2, 1}));
    EXPECT_EQ(p3[2], Partition({1, 1, 1}));
}

TEST(Partitions, CountsMatchRecurrence)
{
    EXPECT_EQ(partitions(8).size(), 22u);
    for (int n = 0; n <= 15; ++n) EXPECT_EQ(static_cast<long>(partitions(n).size()), partition_count(n)) << n;
}

TEST(Partitions, ReverseLexicographicAndDistinct)
{
    for (int n = 1; n <= 10; ++n) {
        const auto& ps = partitions(n);
        for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
        for (const auto& p : ps) EXPECT_EQ(p.size(), n);
    }
}

TEST(Partitions, CanonicalFormAndConjugate)
{
    Partition p({2, 3, 1, 3});
    EXPECT_EQ(p.parts(), (std::vector<int>{3, 3, 2, 1}));
    EXPECT_EQ(p.size(), 9);
    EXPECT_EQ(p.length(), 4);
    EXPECT_THROW(Partition({2, 0}), ArgumentError);
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : partitions(n)) EXPECT_EQ(lam.conjugate().conjugate(), lam);
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Partitions, HookLengthsAndDimension)
{
    EXPECT_EQ(dim(Partition({3})), 1);
    EXPECT_EQ(dim(Partition({2, 1})), 2);
    EXPECT_EQ(dim(Partition({2, 2})), 2);
    auto hooks = Partition({2, 2}).hooks();
    std::sort(hooks.begin(), hooks.end());
    EXPECT_EQ(hooks, (std::vector<int>{1, 2, 2, 3}));

    std::map<std::vector<int>, long> memo;
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : partitions(n)) {
            EXPECT_EQ(static_cast<long>(lam.hooks().size()), n);
            EXPECT_EQ(hook_product(lam) * dim(lam), factorial(n));
            EXPECT_EQ(dim(lam), count_syt(lam.parts(), memo)) << lam;
            std::vector<int> ones(static_cast<std::size_t>(n), 1);
            EXPECT_EQ(character(lam, Partition(ones)), dim(lam)) << lam;
        }
    }
}

TEST(Characters, SpecExamples)
{
    EXPECT_EQ(character(Partition({1, 1}), Partition({2})), -1);
    EXPECT_EQ(character(Partition({2, 1}), Partition({1, 1, 1})), 2);
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions(n)) EXPECT_EQ(character(Partition({n}), mu), 1);
    EXPECT_THROW(character(Partition({2}), Partition({1})), ArgumentError);
}

TEST(Characters, SignAndStandardRepresentation)
{
    for (int n = 2; n <= 8; ++n) {
        const Partition sign_rep(std::vector<int>(static_cast<std::size_t>(n), 1));
        const Partition standard({n - 1, 1});
        for (const auto& mu : partitions(n)) {
            EXPECT_EQ(character(sign_rep, mu), sign_power(n - mu.length()));
            EXPECT_EQ(character(standard, mu), multiplicity(mu, 1) - 1);
        }
    }
}

TEST(Characters, ColumnOrthogonality)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : partitions(n)) {
            for (const auto& nu : partitions(n)) {
                Integer s = 0;
                for (const auto& lam : partitions(n)) s += character(lam, mu) * character(lam, nu);
                EXPECT_EQ(s, mu == nu ? zeta(mu) : Integer(0)) << mu << nu;
            }
        }
    }
}

TEST(CentralCharacter, Examples)
{
    EXPECT_EQ(f2(Partition({1})), 0);
    EXPECT_EQ(f2(Partition({2})), 1);
    EXPECT_EQ(f2(Partition({1, 1})), -1);
    EXPECT_EQ(f2(Partition({2, 1})), 0);
}

TEST(CentralCharacter, ContentSumAndCharacterRatio)
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lam : partitions(n)) {
            long contents = 0;
            for (int c : lam.contents()) contents += c;
            EXPECT_EQ(f2(lam), contents);
            if (n >= 2) {
                std::vector<int> transposition(static_cast<std::size_t>(n - 1), 1);
                transposition[0] = 2;
                Rational ratio = Rational(binomial(n, 2) * character(lam, Partition(transposition))) / Rational(dim(lam));
                EXPECT_EQ(Rational(f2(lam)), ratio) << lam;
            }
            EXPECT_EQ(f2(lam.conjugate()), -f2(lam));
        }
    }
}

TEST(Zeta, Examples)
{
    EXPECT_EQ(zeta(Partition({1, 1})), 2);
    EXPECT_EQ(zeta(Partition({2, 1})), 2);
    EXPECT_EQ(zeta(Partition({2, 2})), 8);
    EXPECT_EQ(zeta(Partition()), 1);
}

TEST(Bernoulli, ValuesAndGeneratingFunction)
{
    EXPECT_EQ(bernoulli(0), 1);
    EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
    EXPECT_EQ(bernoulli(2), make_rational(1, 6));
    EXPECT_EQ(bernoulli(4), make_rational(-1, 30));
    EXPECT_EQ(bernoulli(3), 0);

    // x / (e^x - 1) by series inversion
    const int order = 20;
    const Series gen = (exp_linear(1, order + 1) - Series::constant(1, order + 1)).shifted(-1).inverse();
    for (int m = 0; m < order; ++m)
        EXPECT_EQ(gen.coefficient(m), GaussRat(bernoulli(m) / Rational(factorial(m)))) << m;
}

TEST(TreeFunction, Coefficients)
{
    EXPECT_EQ(tree_coefficient(1), 1);
    EXPECT_EQ(tree_coefficient(2), 1);
    EXPECT_EQ(tree_coefficient(3), make_rational(3, 2));
    EXPECT_EQ(tree_exp_coefficient(make_rational(7, 3), 0), 1);
}

TEST(TreeFunction, FunctionalEquation)
{
    const int order = 13;
    std::vector<GaussRat> t(order);
    for (int n = 1; n < order; ++n) t[static_cast<std::size_t>(n)] = tree_coefficient(n);
    const Series T = Series::from_coefficients(0, t, order);
    const Series lhs = T.exp().shifted(1);
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(lhs.coefficient(n), T.coefficient(n)) << n;
}

TEST(TreeFunction, ExponentialIsAGroupLaw)
{
    const int order = 9;
    for (const Rational& t : {make_rational(1, 2), make_rational(-3), make_rational(5, 7)}) {
        for (const Rational& s : {make_rational(2), make_rational(-1, 3)}) {
            for (int n = 0; n < order; ++n) {
                Rational conv = 0;
                for (int k = 0; k <= n; ++k) conv += tree_exp_coefficient(t, k) * tree_exp_coefficient(s, n - k);
                EXPECT_EQ(conv, tree_exp_coefficient(t + s, n));
            }
        }
    }
    // and agrees with exp(t T) computed by the series exponential
    std::vector<GaussRat> tc(order);
    for (int n = 1; n < order; ++n) tc[static_cast<std::size_t>(n)] = tree_coefficient(n);
    const Rational t = make_rational(3, 5);
    const Series e = (Series::from_coefficients(0, tc, order) * GaussRat(t)).exp();
    for (int n = 0; n < order; ++n) EXPECT_EQ(e.coefficient(n), GaussRat(tree_exp_coefficient(t, n)));
}

TEST(PartitionSumIdentity, Examples)
{
    const Rational t = make_rational(5, 7);
    EXPECT_EQ(ident1_lhs(1, 0, t), -t);
    EXPECT_EQ(ident1_rhs(1, 0, t), -t);
    EXPECT_EQ(ident1_lhs(2, 1, t), t * t - t);
    EXPECT_EQ(ident1_rhs(2, 1, t), t * t - t);
}

TEST(PartitionSumIdentity, BothSidesAgree)
{
    for (int d = 1; d <= 8; ++d)
        for (int k = 0; k <= d; ++k)
            for (const Rational& t : {make_rational(1, 2), make_rational(1), make_rational(3), make_rational(d)})
                EXPECT_EQ(ident1_lhs(d, k, t), ident1_rhs(d, k, t)) << d << ' ' << k << ' ' << t;
}

TEST(PartitionSumIdentity, EvaluationAtDegree)
{
    for (int d = 1; d <= 8; ++d) {
        for (int k = 0; k <= d - 1; ++k) {
            const Rational v = ident1_lhs(d, k, Rational(d));
            if (k == d - 1) EXPECT_EQ(v, pow(Rational(-d), d) / Rational(factorial(d)));
            else EXPECT_EQ(v, 0);
        }
    }
}
