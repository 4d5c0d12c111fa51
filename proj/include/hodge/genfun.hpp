#pragma once

// Generating functions for linear and special cubic Hodge integrals:
// q-dimensions, the ELSV and GMV character sums, connected/disconnected
// conversion, the R-function and the closed-form 0- and 1-point values.
//
// Conventions used throughout:
//  * elsv_rhs(mu) and gmv_rhs(mu, a) are the plain evaluations of the
//    n-variable disconnected series at z = mu; no 1/|Aut mu| factor.
//  * gmv_rhs is expressed in the scaled variable, i.e. it is the series
//    H(mu; -1, -1/a, 1/(a+1); sqrt(a(a+1)) u) written in powers of u.
//    Its u^{2g-2} coefficient is (a(a+1))^{g-1} times the unscaled one.

#include "hodge/combinatorics.hpp"
#include "hodge/series.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace hodge {

/// Truncates to `order`, failing loudly if fewer coefficients are known.
inline Series require_order(const Series& s, int order, const char* what)
{
    if (s.order() < order)
        throw VerificationError(std::string(what) + ": only known through u^" + std::to_string(s.order() - 1) +
                                ", needed u^" + std::to_string(order - 1));
    return s.truncated(order);
}

struct QDim {
    Partition lambda;
    Series series;
};

/// prod over boxes of (2 sinh(u h/2))^{-1}; the constant 1 for the empty partition.
inline QDim qdim_series(const Partition& lambda, int order)
{
    if (lambda.empty()) return {lambda, Series::constant(1, order)};
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, Series> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({lambda, order}); it != cache.end()) return {lambda, it->second};
    }
    const int n = lambda.size();
    std::map<int, int> hook_mult;
    for (int h : lambda.hooks()) ++hook_mult[h];
    // product of the varsigma factors has valuation n
    Series denom = Series::constant(1, order + 2 * n);
    for (auto [h, m] : hook_mult) denom = denom * varsigma_series(h, order + n + 1).pow(m);
    Series result = require_order(denom.inverse(), order, "qdim_series");
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(lambda, order), result);
    return {lambda, result};
}

/// prod_i mu_i^{mu_i} / mu_i!
inline Rational elsv_prefactor(const Partition& mu)
{
    Rational r = 1;
    for (int m : mu.parts()) r *= ratio(ipow(m, m), factorial(m));
    return r;
}

/// prod_i binom((a+1) mu_i, mu_i) with the generalized binomial.
inline Rational gmv_prefactor(const Partition& mu, const Rational& a)
{
    Rational r = 1;
    for (int m : mu.parts()) r *= binomial((a + 1) * m, m);
    return r;
}

/// Disconnected linear series H(mu; -1; u) from the character sum.
inline Series elsv_rhs(const Partition& mu, int order)
{
    if (mu.empty()) throw ArgumentError("elsv_rhs needs a nonempty partition");
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, Series> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({mu, order}); it != cache.end()) return it->second;
    }
    const int d = mu.size();
    const int shift = d + mu.length();
    const int terms = std::max(order + shift, 0);
    // sum_k u^k/k! sum_lambda (dim/|lambda|!) chi f2^k
    std::map<long, Integer> weight; // sum of dim * chi over lambda with a given f2
    for (const Partition& lam : partitions(d)) {
        const Integer chi = character(lam, mu);
        if (chi != 0) weight[f2(lam)] += dim(lam) * chi;
    }
    std::vector<Rational> sum(static_cast<std::size_t>(terms));
    const Integer dfact = factorial(d);
    for (const auto& [f, w0] : weight) {
        if (w0 == 0) continue;
        Rational w = ratio(w0, dfact);
        for (int k = 0; k < terms; ++k) {
            sum[static_cast<std::size_t>(k)] += w;
            w *= Rational(f) / Rational(k + 1);
        }
    }
    const Rational pref_inv = 1 / elsv_prefactor(mu);
    std::vector<GaussRat> coeffs;
    coeffs.reserve(sum.size());
    for (auto& c : sum) coeffs.emplace_back(c * pref_inv);
    Series result = Series::from_coefficients(-shift, std::move(coeffs), order);
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(mu, order), result);
    return result;
}

namespace detail {

// sum_{lambda : f2(lambda) = f} chi^lambda_mu qdim(lambda), grouped by f2 value.
inline const std::map<long, Series>& qdim_character_groups(const Partition& mu, int order)
{
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, std::map<long, Series>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({mu, order}); it != cache.end()) return it->second;
    }
    std::map<long, Series> groups;
    for (const Partition& lam : partitions(mu.size())) {
        const Integer chi = character(lam, mu);
        if (chi == 0) continue;
        Series term = qdim_series(lam, order).series * GaussRat(Rational(chi));
        auto [it, fresh] = groups.try_emplace(f2(lam), term);
        if (!fresh) it->second += term;
    }
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(mu, order), std::move(groups)).first->second;
}

} // namespace detail

/// Disconnected special cubic series H(mu; -1, -1/a, 1/(a+1); sqrt(a(a+1)) u).
inline Series gmv_rhs(const Partition& mu, const Rational& a, int order)
{
    if (mu.empty()) throw ArgumentError("gmv_rhs needs a nonempty partition");
    if (a == 0 || a == -1) throw ArgumentError("gmv_rhs: a must avoid 0 and -1");
    const Rational pref = gmv_prefactor(mu, a);
    if (pref == 0) throw ArgumentError("gmv_rhs: vanishing binomial prefactor at a = " + to_string(a));
    const int len = mu.length();
    // the character sum has valuation >= -|mu|; (au)^{-l} shifts by -l
    const int inner = order + len;
    const Rational c = a + make_rational(1, 2);
    Series sum(inner);
    for (const auto& [f, group] : detail::qdim_character_groups(mu, inner + mu.size()))
        sum += group * exp_linear(c * f, inner + mu.size());
    Series result = sum.shifted(-len) * GaussRat(1 / (pow(a, len) * pref));
    return require_order(result, order, "gmv_rhs");
}

/// Nonempty subsets of n positions, indexed by bitmask.
using SubsetFamily = std::map<std::uint32_t, Series>;

namespace detail {

inline std::uint32_t lowest_bit(std::uint32_t s) { return s & (~s + 1); }

inline const Series& family_at(const SubsetFamily& f, std::uint32_t mask)
{
    auto it = f.find(mask);
    if (it == f.end()) throw ArgumentError("subset family is missing the value for mask " + std::to_string(mask));
    return it->second;
}

} // namespace detail

/// H_conn(S) = H_disc(S) - sum over proper blocks B containing min(S) of H_conn(B) H_disc(S \ B).
inline SubsetFamily disconnected_to_connected(const SubsetFamily& disc, int n)
{
    SubsetFamily conn;
    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t s = 1; s <= full; ++s) {
        Series value = detail::family_at(disc, s);
        const std::uint32_t low = detail::lowest_bit(s);
        const std::uint32_t rest = s & ~low;
        // proper sub-blocks B = low | sub, sub a proper subset of rest
        for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
            if (sub != rest) {
                const std::uint32_t block = low | sub;
                value -= conn.at(block) * detail::family_at(disc, s & ~block);
            }
            if (sub == 0) break;
        }
        conn.emplace(s, std::move(value));
    }
    return conn;
}

/// Inverse of disconnected_to_connected.
inline SubsetFamily connected_to_disconnected(const SubsetFamily& conn, int n)
{
    SubsetFamily disc;
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const std::uint32_t low = detail::lowest_bit(s);
        const std::uint32_t rest = s & ~low;
        Series value = detail::family_at(conn, s);
        for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
            if (sub != rest) {
                const std::uint32_t block = low | sub;
                value += detail::family_at(conn, block) * disc.at(s & ~block);
            }
            if (sub == 0) break;
        }
        disc.emplace(s, std::move(value));
    }
    return disc;
}

/// Linear (ELSV) or special cubic (GMV, parameter a) flavor of a series.
struct Flavor {
    std::optional<Rational> cubic_a;
    static Flavor linear() { return {}; }
    static Flavor cubic(Rational a) { return {std::move(a)}; }
    bool is_cubic() const { return cubic_a.has_value(); }
    friend bool operator<(const Flavor& x, const Flavor& y) { return x.cubic_a < y.cubic_a; }
};

struct ConnectedKey {
    std::vector<int> args; // positive integers, order irrelevant
    Flavor flavor;
};

inline Series disconnected_series(const Partition& mu, const Flavor& flavor, int order)
{
    return flavor.is_cubic() ? gmv_rhs(mu, *flavor.cubic_a, order) : elsv_rhs(mu, order);
}

/// Connected series at integer arguments, extracted from the disconnected character sums.
inline Series connected_series(const ConnectedKey& key, int order)
{
    if (key.args.empty()) throw ArgumentError("connected_series needs at least one argument");
    const Partition mu(key.args);
    static std::mutex mutex;
    static std::map<std::tuple<Partition, Flavor, int>, Series> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({mu, key.flavor, order}); it != cache.end()) return it->second;
    }
    const int n = mu.length();
    // each connected piece has valuation >= -2, a disconnected one on k points >= -2k
    const int work = order + 2 * (n - 1);
    SubsetFamily disc;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<int> parts;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) parts.push_back(mu[i]);
        disc.emplace(s, disconnected_series(Partition(parts), key.flavor, work));
    }
    const SubsetFamily conn = disconnected_to_connected(disc, n);
    Series result = require_order(conn.at((1u << n) - 1u), order, "connected_series");
    std::lock_guard lock(mutex);
    cache.emplace(std::make_tuple(mu, key.flavor, order), result);
    return result;
}

/// Genus-g 0-point special cubic value for g >= 2.
inline Rational zero_point_cubic(int g, const Rational& t1, const Rational& t2, const Rational& t3)
{
    if (g < 2) throw ArgumentError("zero_point_cubic needs g >= 2");
    const Rational t[3] = {t1, t2, t3};
    const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    Rational mono = 0;
    for (const auto& p : perm) mono += pow(t[p[0]], g) * pow(t[p[1]], g - 1) * pow(t[p[2]], g - 2);
    mono = mono / 2 + pow(t1 * t2 * t3, g - 1);
    const Rational b2g = abs(bernoulli(2 * g)) / (2 * g);
    const Rational b2g2 = abs(bernoulli(2 * g - 2)) / (2 * g - 2);
    return mono * b2g * b2g2 / Rational(factorial(2 * g - 2));
}

/// multinomial(2g-3+m; gamma) [u^{2g-2}] 1/(2u sin(u/2)); zero off the dimension constraint.
inline Rational lam_g_value(int g, const std::vector<int>& gamma)
{
    if (g < 0) throw ArgumentError("negative genus");
    const int m = static_cast<int>(gamma.size());
    int total = 0;
    for (int x : gamma) {
        if (x < 0) throw ArgumentError("negative psi exponent");
        total += x;
    }
    if (total != 2 * g - 3 + m) return 0;
    Integer multinomial = factorial(total);
    for (int x : gamma) multinomial /= factorial(x);
    const Series kernel = sin_kernel(1, 2 * g - 1);
    return Rational(multinomial) * kernel.coefficient(2 * g - 2).re();
}

/// R(m, a, u) = prod_{j=1}^m S((am+j-1)u)/S(ju) for a positive integer m.
inline Series R_series_product(int m, const Rational& a, int order)
{
    if (m < 1) throw ArgumentError("R_series_product needs m >= 1");
    Series num = Series::constant(1, order), den = Series::constant(1, order);
    for (int j = 1; j <= m; ++j) {
        num = num * S_series(a * m + j - 1, order);
        den = den * S_series(j, order);
    }
    return num / den;
}

/// R(z, a, u) from the Bernoulli double sum for ln R, valid for rational z.
inline Series R_series_bernoulli(const Rational& z, const Rational& a, int order)
{
    std::vector<GaussRat> logc(static_cast<std::size_t>(std::max(order, 1)));
    for (int k = 1; 2 * k < order; ++k) {
        Rational total = 0;
        for (int l = 0; l <= 2 * k + 1; ++l) {
            const Rational bracket = pow(a * z + z, l) - pow(a * z, l) - pow(z + 1, l) + 1;
            if (bracket == 0) continue;
            total += bernoulli(2 * k) * bernoulli(2 * k - l + 1) * bracket /
                     Rational(Integer(2 * k) * factorial(l) * factorial(2 * k - l + 1));
        }
        logc[static_cast<std::size_t>(2 * k)] = total;
    }
    Series lg = Series::from_coefficients(0, std::move(logc), order);
    if (lg.is_zero()) return Series::constant(1, order);
    return lg.exp();
}

/// R(z, a, u): the finite product at positive integers, the Bernoulli form otherwise.
inline Series R_series(const Rational& z, const Rational& a, int order)
{
    if (z.get_den() == 1 && z > 0) return R_series_product(static_cast<int>(z.get_num().get_si()), a, order);
    return R_series_bernoulli(z, a, order);
}

/// (1/((a+1)u)) R(m,a,u) / varsigma(a m u): the 1-point cubic series.
inline Series one_point_cubic(int m, const Rational& a, int order)
{
    if (m < 1) throw ArgumentError("one_point_cubic needs m >= 1");
    if (a == 0 || a == -1) throw ArgumentError("one_point_cubic: a must avoid 0 and -1");
    const Series r = R_series(m, a, order + 2);
    const Series inv_vs = varsigma_series(a * m, order + 3).inverse();
    const Series result = (r * inv_vs).shifted(-1) / GaussRat(a + 1);
    return require_order(result, order, "one_point_cubic");
}

} // namespace hodge
