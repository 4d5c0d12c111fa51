#include "hodge/hodge_tables.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hodge;

namespace {

const HodgeTable& linear_table()
{
    static const HodgeTable t = extract_linear_table(2, 3);
    return t;
}

const CubicHodgeTable& cubic_table()
{
    static const CubicHodgeTable t = [] {
        std::vector<Rational> nodes;
        for (long a = 1; a <= 9; ++a) nodes.push_back(a);
        return extract_cubic_table(2, 2, nodes);
    }();
    return t;
}

Rational lin(int g, std::vector<int> nu, int j) { return linear_table().find({g, std::move(nu), j}).value(); }

} // namespace

TEST(Interpolation, RecoversRandomPolynomials)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int vars = 1; vars <= 3; ++vars) {
        const int nodes = 4;
        std::size_t total = 1;
        for (int v = 0; v < vars; ++v) total *= nodes;
        std::vector<Rational> truth(total);
        for (auto& c : truth) c = make_rational(coef(rng), 7);
        std::vector<Rational> values;
        std::vector<int> z(static_cast<std::size_t>(vars), 1);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int k = vars - 1; k >= 0; --k) {
                z[static_cast<std::size_t>(k)] = static_cast<int>(rest % nodes) + 1;
                rest /= nodes;
            }
            Rational v = 0;
            for (std::size_t m = 0; m < total; ++m) {
                Rational term = truth[m];
                std::size_t e = m;
                for (int k = vars - 1; k >= 0; --k) {
                    term *= pow(Rational(z[static_cast<std::size_t>(k)]), static_cast<long>(e % nodes));
                    e /= nodes;
                }
                v += term;
            }
            values.push_back(v);
        }
        EXPECT_EQ(interpolate_grid(values, nodes, vars), truth);
    }
}

TEST(Interpolation, ExactSolve)
{
    const Matrix a{{1, 2}, {3, 4}, {5, 6}};
    EXPECT_EQ(solve_exact(a, {5, 11, 17}), (std::vector<Rational>{1, 2}));
    EXPECT_THROW(solve_exact(a, {5, 11, 18}), VerificationError);
    EXPECT_THROW(solve_exact(Matrix{{1, 2}, {2, 4}}, {1, 2}), ArgumentError);
}

TEST(LambdaRing, GenusTwoRelations)
{
    LambdaRing ring(2);
    EXPECT_EQ(ring.basis(0).size(), 1u);
    EXPECT_EQ(ring.basis(1).size(), 1u);
    EXPECT_EQ(ring.basis(2).size(), 1u);
    EXPECT_EQ(ring.basis(3).size(), 1u);
    EXPECT_EQ(ring.basis(4).size(), 0u);
    // lambda_1^2 = 2 lambda_2
    const auto l11 = ring.normal_form(*ring.product({1, 1}));
    const auto l2 = ring.normal_form(*ring.product({2}));
    EXPECT_EQ(l11[0], 2 * l2[0]);
    EXPECT_FALSE(ring.product({3}).has_value());
    LambdaRing one(1);
    EXPECT_EQ(one.basis(2).size(), 0u);
}

TEST(LinearTable, SmallValues)
{
    EXPECT_EQ(lin(0, {0, 0, 0}, 0), 1);
    EXPECT_EQ(lin(1, {1}, 0), make_rational(1, 24));
    EXPECT_EQ(lin(1, {0}, 1), make_rational(1, 24));
    EXPECT_EQ(lin(2, {2}, 2), make_rational(7, 5760));
    // classical pure-psi values
    EXPECT_EQ(lin(2, {4}, 0), make_rational(1, 1152));
    EXPECT_EQ(lin(2, {3, 2}, 0), make_rational(29, 5760));
    EXPECT_EQ(lin(1, {1, 1}, 0), make_rational(1, 24));
    EXPECT_FALSE(linear_table().find({1, {1}, 1}).has_value());
}

TEST(LinearTable, GenusZeroClosedForm)
{
    const HodgeTable t = extract_linear_table(0, 5);
    int checked = 0;
    for (const auto& [key, value] : t.entries()) {
        ASSERT_EQ(key.g, 0);
        Integer denom = 1;
        for (int x : key.nu) denom *= factorial(x);
        EXPECT_EQ(value, ratio(factorial(static_cast<long>(key.nu.size()) - 3), denom)) << key_string(key);
        ++checked;
    }
    // sorted keys: (0,0,0), (1,0,0,0), (2,0,0,0,0), (1,1,0,0,0)
    EXPECT_EQ(checked, 4);
}

TEST(LinearTable, StringAndDilaton)
{
    for (const auto& [key, value] : linear_table().entries()) {
        const int n = static_cast<int>(key.nu.size());
        if (!is_stable(key.g, n - 1) || !linear_table().covers(key.g, n - 1)) continue;
        if (key.nu.back() == 0) {
            std::vector<int> rest(key.nu.begin(), key.nu.end() - 1);
            Rational s = 0;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                if (rest[k] == 0) continue;
                auto lowered = rest;
                --lowered[k];
                s += linear_table().find({key.g, lowered, key.j}).value_or(0);
            }
            EXPECT_EQ(value, s) << key_string(key);
        }
        if (key.nu.back() == 1) {
            std::vector<int> rest(key.nu.begin(), key.nu.end() - 1);
            EXPECT_EQ(value, Rational(2 * key.g - 3 + n) * linear_table().find({key.g, rest, key.j}).value())
                << key_string(key);
        }
    }
}

TEST(LinearTable, LambdaGEntries)
{
    for (const auto& [key, value] : linear_table().entries())
        if (key.j == key.g && key.g >= 1) {
            EXPECT_EQ(value, lam_g_value(key.g, key.nu)) << key_string(key);
        }
}

TEST(LinearTable, JsonAndCsv)
{
    const HodgeTable& t = linear_table();
    const nlohmann::json j = to_json(t);
    EXPECT_EQ(j.at("entries").at("(2|2|2)"), "7/5760");
    const HodgeTable back = table_from_json<HodgeKey>(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.entries(), t.entries());
    EXPECT_EQ(back.covered(), t.covered());
    EXPECT_NE(to_csv(t).find("2,2,2,7/5760\n"), std::string::npos);
    EXPECT_EQ(parse_cubic_key("(2|1|2,1,0)").j, (std::array<int, 3>{2, 1, 0}));
}

TEST(LinearTable, Budget)
{
    EXPECT_THROW(extract_linear_table(4, 1), ArgumentError);
    EXPECT_THROW(extract_linear_table(3, 4), ArgumentError);
    EXPECT_THROW(extract_cubic_table(1, 1, {1, 2}), ArgumentError);
}

TEST(LinearHodgeEvaluator, ReducesBeyondTable)
{
    const LinearHodge h(linear_table());
    EXPECT_EQ(h.value(0, {0, 0, 0, 0, 1}, 0), 0); // off dimension
    EXPECT_EQ(h.value(0, {2, 0, 0, 0, 0}, 0), 1);
    EXPECT_EQ(h.value(0, {1, 1, 0, 0, 0}, 0), 2);
    EXPECT_EQ(h.value(1, {1, 1, 1, 1}, 0), make_rational(6, 24));
    EXPECT_EQ(h.value(2, {2, 1, 0, 0}, 2), lam_g_value(2, {2, 1, 0, 0}));
    EXPECT_EQ(h.value(2, {4, 1, 1, 1}, 0), make_rational(5 * 4 * 3, 1152));
    EXPECT_EQ(h.value(2, {3}, 2), 0);
}

TEST(CubicTable, MatchesLinearAndZeroPoint)
{
    const CubicHodgeTable& c = cubic_table();
    EXPECT_EQ(c.find({1, {1}, {0, 0, 0}}).value(), make_rational(1, 24));
    // t2, t3-free slice equals the linear table
    int shared = 0;
    for (const auto& [key, value] : c.entries()) {
        if (key.j[1] != 0 || key.j[2] != 0) continue;
        if (auto v = linear_table().find({key.g, key.nu, key.j[0]})) {
            EXPECT_EQ(value, *v) << key_string(key);
            ++shared;
        }
    }
    EXPECT_GT(shared, 10);
    // lambda products do not depend on slot order
    for (const auto& [key, value] : c.entries()) {
        std::array<int, 3> s = key.j;
        std::sort(s.begin(), s.end());
        EXPECT_EQ(value, c.find({key.g, key.nu, s}).value()) << key_string(key);
    }
    // dilaton against the genus-two 0-point coefficients
    const Rational l2l1 = zero_point_cubic(2, 1, 1, 0) / 2;
    EXPECT_EQ(l2l1, make_rational(1, 5760));
    EXPECT_EQ(c.find({2, {1}, {2, 1, 0}}).value(), 2 * l2l1);
    const Rational l111 = zero_point_cubic(2, 1, 1, 1) - 6 * l2l1;
    EXPECT_EQ(c.find({2, {1}, {1, 1, 1}}).value(), 2 * l111);
}
