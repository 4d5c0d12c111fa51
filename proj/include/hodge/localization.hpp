#pragma once

// Connected bilinear localization sums and their closed form.
//
// z_connected enumerates labeled edge tuples (weight 1/k!) and connected gluings:
// every edge joins one zero-side block to one infinity-side block, markings sit
// in zero-side blocks, and the incidence graph must be connected. Zero-side blocks
// carry connected linear Hodge data at u -> i a u, infinity-side blocks carry the
// connected cubic series at u -> i u (in the scaled variable).

#include "hodge/hodge_tables.hpp"
#include "hodge/report.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <numeric>

namespace hodge {

struct MarkedProblem {
    std::vector<int> nu; // psi exponents, may contain zeros
    int d = 1;
    Rational a = 1;
    int order = 4; // series known through u^{order-1}

    void validate() const
    {
        if (nu.empty()) throw ArgumentError("problem needs at least one marking");
        for (int x : nu)
            if (x < 0) throw ArgumentError("negative psi exponent");
        if (d < 1) throw ArgumentError("degree must be positive");
        if (a == 0 || a == -1) throw ArgumentError("a must avoid 0 and -1");
    }

    int nu_total() const { return std::accumulate(nu.begin(), nu.end(), 0); }

    nlohmann::json json() const
    {
        return {{"nu", nu}, {"d", d}, {"a", to_string(a)}, {"order", order}};
    }
};

/// (au)^2 (m^m/m!) binom((a+1)m, m) / m
inline Series edge_weight(int m, const Rational& a, int order)
{
    if (m < 1) throw ArgumentError("edge_weight needs m >= 1");
    Rational w = a * a * ratio(ipow(m, m), factorial(m)) * binomial((a + 1) * m, m) / m;
#ifdef HODGE_INJECT_EDGE_SIGN_FAULT
    w = -w;
#endif
    return Series::monomial(GaussRat(w), 2, order);
}

/// All ordered tuples of positive integers summing to d.
inline std::vector<std::vector<int>> compositions(int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int m = 1; m <= left; ++m) {
            cur.push_back(m);
            rec(left - m);
            cur.pop_back();
        }
    };
    if (d > 0) rec(d);
    return out;
}

/// Set partitions of {0..k-1} as block labels (restricted growth strings).
inline std::vector<std::vector<int>> set_partitions(int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> label(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == k) {
            out.push_back(label);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

class Localization {
public:
    /// Uses linear Hodge data from `table`, reduced by string/dilaton where needed.
    explicit Localization(HodgeTable table) : hodge_(std::make_unique<LinearHodge>(std::move(table))) {}

    /// Default data: the linear table for g <= 2, n <= 3.
    static const Localization& standard()
    {
        static const Localization loc(extract_linear_table(2, 3));
        return loc;
    }

    const LinearHodge& hodge() const { return *hodge_; }

    /// Connected localization series Z_d(nu; u).
    Series z_connected(const MarkedProblem& p) const
    {
        p.validate();
        const int n = static_cast<int>(p.nu.size());
        Series total(p.order);
        for (int k = 1; k <= p.d; ++k) {
            Series by_k(p.order);
            const auto zero_partitions = set_partitions(k);
            for (const auto& edges : compositions(p.d)) {
                if (static_cast<int>(edges.size()) != k) continue;
                GaussRat edge_scalar = 1;
                for (int m : edges) edge_scalar = edge_scalar * edge_weight(m, p.a, 3).coefficient(2);
                const Series edge_product = Series::monomial(edge_scalar, 2 * k, p.order + 4 * k + 4);
                for (const auto& zp : zero_partitions) {
                    const int zero_blocks = 1 + *std::max_element(zp.begin(), zp.end());
                    for (const auto& ip : zero_partitions) {
                        const int inf_blocks = 1 + *std::max_element(ip.begin(), ip.end());
                        if (!connected(zp, ip)) continue;
                        // every block factor has valuation >= -2, the edges contribute u^{2k}
                        const int blocks = zero_blocks + inf_blocks;
                        const int factor_order = p.order - 2 * k + 2 * (blocks - 1);
                        Series inf_part = Series::constant(1, factor_order + 2 * blocks);
                        for (int c = 0; c < inf_blocks; ++c) {
                            std::vector<int> ms;
                            for (int e = 0; e < k; ++e)
                                if (ip[static_cast<std::size_t>(e)] == c) ms.push_back(edges[static_cast<std::size_t>(e)]);
                            inf_part = inf_part * infinity_factor(ms, p.a, factor_order);
                        }
                        // markings are distributed over the zero blocks independently
                        std::vector<int> assign(static_cast<std::size_t>(n), 0);
                        while (true) {
                            Series term = inf_part * edge_product;
                            for (int b = 0; b < zero_blocks; ++b) {
                                std::vector<int> marks, ms;
                                for (int i = 0; i < n; ++i)
                                    if (assign[static_cast<std::size_t>(i)] == b) marks.push_back(p.nu[static_cast<std::size_t>(i)]);
                                for (int e = 0; e < k; ++e)
                                    if (zp[static_cast<std::size_t>(e)] == b) ms.push_back(edges[static_cast<std::size_t>(e)]);
                                term = term * zero_factor(marks, ms, p.a, factor_order);
                            }
                            by_k += term;
                            int i = 0;
                            while (i < n && ++assign[static_cast<std::size_t>(i)] == zero_blocks) assign[static_cast<std::size_t>(i++)] = 0;
                            if (i == n) break;
                        }
                    }
                }
            }
            total += by_k / GaussRat(Rational(factorial(k)));
        }
        if (p.d % 2) total = -total;
        return require_order(total, p.order, "z_connected");
    }

    /// Zero-side block factor: [prod z_i^{nu_i+1}] of the connected linear series
    /// at the edge values, with u -> i a u.
    Series zero_factor(std::vector<int> marks, std::vector<int> ms, const Rational& a, int order) const
    {
        std::sort(marks.begin(), marks.end());
        std::sort(ms.begin(), ms.end());
        auto key = std::make_tuple(marks, ms, a, order);
        {
            std::lock_guard lock(mutex_);
            if (auto it = zero_cache_.find(key); it != zero_cache_.end()) return it->second;
        }
        std::vector<GaussRat> coeffs;
        for (int g = 0; 2 * g - 2 < order; ++g) coeffs.push_back(GaussRat(genus_term(g, marks, ms)));
        // coeffs[g] multiplies u^{2g-2}; spread to a dense list from u^{-2}
        std::vector<GaussRat> dense;
        for (std::size_t g = 0; g < coeffs.size(); ++g) {
            dense.push_back(coeffs[g]);
            dense.emplace_back(0);
        }
        Series plain = Series::from_coefficients(-2, std::move(dense), order);
        Series result = plain.rescaled(GaussRat(a)).conj_i();
        std::lock_guard lock(mutex_);
        zero_cache_.emplace(std::move(key), result);
        return result;
    }

    /// Infinity-side block factor: connected cubic series at the edge values with u -> i u.
    static Series infinity_factor(const std::vector<int>& ms, const Rational& a, int order)
    {
        return connected_series({ms, Flavor::cubic(a)}, order).conj_i();
    }

    /// Genus-g coefficient of the zero-side factor before the u -> i a u substitution.
    Rational genus_term(int g, const std::vector<int>& marks, const std::vector<int>& ms) const
    {
        const int s = static_cast<int>(marks.size());
        const int r = static_cast<int>(ms.size());
        if (!is_stable(g, s + r)) {
            if (g != 0) throw ArgumentError("unstable block in positive genus");
            if (s == 0 && r == 1) return ratio(1, ms[0]);
            if (s == 0 && r == 2) return ratio(ms[0] * ms[1], ms[0] + ms[1]);
            if (s == 1 && r == 1) return sign_power(marks[0]) * pow(Rational(ms[0]), -marks[0]);
            throw ArgumentError("zero-side block without edges");
        }
        int mark_total = 0;
        for (int x : marks) mark_total += x;
        const int dimension = 3 * g - 3 + s + r - mark_total;
        if (dimension < 0) return 0;
        Rational edge_prefactor = 1;
        for (int m : ms) edge_prefactor *= m;
        Rational total = 0;
        // beta exponents on the edge points with |beta| = dimension - j, 0 <= j <= g
        std::vector<int> beta(static_cast<std::size_t>(r), 0);
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx == r - 1) {
                beta[static_cast<std::size_t>(idx)] = left;
                const int j = dimension - std::accumulate(beta.begin(), beta.end(), 0);
                if (j < 0 || j > g) return;
                std::vector<int> exps = marks;
                exps.insert(exps.end(), beta.begin(), beta.end());
                Rational mono = sign_power(j);
                for (int e = 0; e < r; ++e) mono *= pow(Rational(ms[static_cast<std::size_t>(e)]), beta[static_cast<std::size_t>(e)]);
                total += mono * hodge_->value(g, exps, j);
                return;
            }
            for (int b = 0; b <= left; ++b) {
                beta[static_cast<std::size_t>(idx)] = b;
                rec(idx + 1, left - b);
            }
        };
        for (int size = std::max(0, dimension - g); size <= dimension; ++size) rec(0, size);
        return edge_prefactor * total;
    }

private:
    // Union of edges sharing a zero block or an infinity block must be everything.
    static bool connected(const std::vector<int>& zp, const std::vector<int>& ip)
    {
        const std::size_t k = zp.size();
        std::vector<std::size_t> parent(k);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (std::size_t e = 0; e < k; ++e)
            for (std::size_t f = e + 1; f < k; ++f)
                if (zp[e] == zp[f] || ip[e] == ip[f]) parent[find(e)] = find(f);
        for (std::size_t e = 1; e < k; ++e)
            if (find(e) != find(0)) return false;
        return true;
    }

    std::unique_ptr<LinearHodge> hodge_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<std::vector<int>, std::vector<int>, Rational, int>, Series> zero_cache_;
};

/// (-1)^{d+1} d^{n-2}/prod nu_i! * 1/(2u sin(du/2)) when |nu| = d-1, else zero.
inline Series i_closed(const MarkedProblem& p)
{
    p.validate();
    if (p.nu_total() != p.d - 1) return Series(p.order);
    Integer fact = 1;
    for (int x : p.nu) fact *= factorial(x);
    const Rational c = sign_power(p.d + 1) * pow(Rational(p.d), static_cast<long>(p.nu.size()) - 2) / Rational(fact);
    return sin_kernel(p.d, p.order) * GaussRat(c);
}

/// Z_d(nu) = -(1/a) I_d(nu) when |nu| = d-1, and Z_d(nu) = 0 when |nu| < d-1.
inline CheckReport verify_bilinear(const MarkedProblem& p, const Localization& loc = Localization::standard())
{
    p.validate();
    if (p.nu_total() > p.d - 1) throw ArgumentError("bilinear relations need |nu| <= d-1");
    CheckReport report{"bilinear", p.json(), {}, true, nullptr, nullptr};
    const Series z = loc.z_connected(p);
    const Series expected = i_closed(p) / GaussRat(-p.a);
    compare_series(report, z, expected, -2, p.order);
    if (report.passed && !z.is_real()) {
        report.passed = false;
        report.first_mismatch = {{"reason", "non-real coefficient"}};
    }
    return report;
}

/// Partition-sum check of the genus-g coefficient against its closed form; the lambda_g
/// integrals are evaluated both in closed form and by expanding 1/prod(1 - mu psi).
inline CheckReport igsum_check(int g, const MarkedProblem& p)
{
    p.validate();
    if (g < 0) throw ArgumentError("negative genus");
    if (p.nu_total() != p.d - 1) throw ArgumentError("igsum_check needs |nu| = d-1");
    const int n = static_cast<int>(p.nu.size());
    if (!is_stable(g, n + 1)) throw ArgumentError("igsum_check needs 2g - 1 + n > 0");
    const Rational kernel = sin_kernel(1, 2 * g - 1).coefficient(2 * g - 2).re();
    Integer nu_multinomial = factorial(p.d - 1), nu_fact = 1;
    for (int x : p.nu) {
        nu_multinomial /= factorial(x);
        nu_fact *= factorial(x);
    }
    Rational closed_sum = 0, direct_sum = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const Partition& mu : partitions(p.d)) {
        const int len = mu.length();
        Rational weight = Rational(sign_power(len + 1)) / Rational(mu.aut_order());
        for (int m : mu.parts()) weight *= ratio(ipow(m, m - 1), factorial(m));
        if (2 * g - 3 + n + len < 0) continue;
        const Rational closed = pow(Rational(p.d), 2 * g - 2 + n - p.d + len) * Rational(nu_multinomial) *
                                Rational(binomial(2 * g - 3 + n + len, p.d - 1)) * kernel;
        // direct: sum over gamma with |gamma| = 2g-3+n+len - |nu|
        const int left = 2 * g - 3 + n + len - p.nu_total();
        Rational direct = 0;
        if (is_stable(g, n + len) && left >= 0) {
            std::vector<int> gamma(static_cast<std::size_t>(len), 0);
            std::function<void(int, int)> rec = [&](int idx, int rest) {
                if (idx == len - 1) {
                    gamma[static_cast<std::size_t>(idx)] = rest;
                    std::vector<int> exps = p.nu;
                    exps.insert(exps.end(), gamma.begin(), gamma.end());
                    Rational mono = 1;
                    for (int i = 0; i < len; ++i) mono *= pow(Rational(mu[i]), gamma[static_cast<std::size_t>(i)]);
                    direct += mono * lam_g_value(g, exps);
                    return;
                }
                for (int b = 0; b <= rest; ++b) {
                    gamma[static_cast<std::size_t>(idx)] = b;
                    rec(idx + 1, rest - b);
                }
            };
            rec(0, left);
        }
        closed_sum += weight * closed;
        direct_sum += weight * direct;
        rows.push_back({{"mu", mu.str()}, {"closed", to_string(closed)}, {"direct", to_string(direct)}});
    }
    const Rational rhs = sign_power(p.d + 1) * pow(Rational(p.d), 2 * g - 2 + n - 1) / Rational(nu_fact) * kernel;
    CheckReport report{"lambda_g_sum", p.json(), {2 * g - 2}, true, nullptr, nullptr};
    report.problem["g"] = g;
    report.details = {{"partition_sum_closed", to_string(closed_sum)},
                      {"partition_sum_direct", to_string(direct_sum)},
                      {"closed_form", to_string(rhs)},
                      {"rows", rows}};
    if (closed_sum != rhs || direct_sum != rhs) {
        report.passed = false;
        report.first_mismatch = {{"exponent", 2 * g - 2}, {"expected", to_string(rhs)},
                                 {"closed", to_string(closed_sum)}, {"direct", to_string(direct_sum)}};
    }
    return report;
}

/// a(a+1) [u^{2g-2}] of the connected cubic series at integer args is a polynomial in a
/// of degree <= 2g: interpolate on a = 1..2g+1 and test held-out nodes.
inline CheckReport a_polynomial_check(const std::vector<int>& args, int g)
{
    if (g < 0) throw ArgumentError("negative genus");
    auto value_at = [&](const Rational& a) -> Rational {
        const Series s = connected_series({args, Flavor::cubic(a)}, 2 * g - 1);
        return a * (a + 1) * s.coefficient(2 * g - 2).re();
    };
    std::vector<Rational> values;
    for (long a = 1; a <= 2 * g + 1; ++a) values.push_back(value_at(a));
    const std::vector<Rational> poly = interpolate_1d(values);
    CheckReport report{"a_polynomial", {{"args", args}, {"g", g}}, {2 * g - 2}, true, nullptr, nullptr};
    for (const Rational& held : {Rational(2 * g + 2), make_rational(1, 3), make_rational(-5, 2)}) {
        Rational predicted = 0;
        for (std::size_t k = poly.size(); k-- > 0;) predicted = predicted * held + poly[k];
        const Rational actual = value_at(held);
        report.details["held_out"].push_back({to_string(held), to_string(predicted), to_string(actual)});
        if (report.passed && predicted != actual) {
            report.passed = false;
            report.first_mismatch = {{"a", to_string(held)}, {"expected", to_string(predicted)}, {"actual", to_string(actual)}};
        }
    }
    return report;
}

} // namespace hodge
