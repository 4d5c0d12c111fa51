#pragma once

// Individual Hodge integrals recovered from the generating functions.
//
// Linear table:  int_{M_{g,n}} lambda_j prod psi_i^{nu_i}, by interpolating the
// connected linear series on an integer grid.
// Cubic table:   int lambda_{j1} lambda_{j2} lambda_{j3} prod psi^nu, by interpolating
// the connected cubic series over z and then solving over a-nodes. The lambda
// monomials are reduced modulo the even parts of c(E)c(E^dual) = 1 so that the
// unknowns are independent.

#include "hodge/genfun.hpp"
#include "hodge/interpolation.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <compare>
#include <functional>
#include <set>
#include <sstream>

namespace hodge {

inline constexpr const char* kTableSchema = "hodge-table/1";

/// Grid budgets: n * (3g-2+n) bounds the largest partition size that gets evaluated.
inline constexpr int kLinearGridBudget = 30;
inline constexpr int kCubicGridBudget = 21;
inline constexpr int kMaxTableGenus = 3;
inline constexpr int kMaxCubicGenus = 2;

inline bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

inline std::vector<int> sorted_exponents(std::vector<int> nu)
{
    for (int x : nu)
        if (x < 0) throw ArgumentError("negative psi exponent");
    std::sort(nu.begin(), nu.end(), std::greater<>());
    return nu;
}

struct HodgeKey {
    int g = 0;
    std::vector<int> nu;
    int j = 0;
    friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
};

struct CubicKey {
    int g = 0;
    std::vector<int> nu;
    std::array<int, 3> j{};
    friend auto operator<=>(const CubicKey&, const CubicKey&) = default;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::vector<int> split_ints(const std::string& text, char sep)
{
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw ArgumentError("malformed integer in key: " + item);
        out.push_back(v);
    }
    return out;
}

// "(g|nu|j...)" -> three fields
inline std::array<std::string, 3> split_key(const std::string& key)
{
    if (key.size() < 2 || key.front() != '(' || key.back() != ')') throw ArgumentError("malformed table key: " + key);
    const std::string body = key.substr(1, key.size() - 2);
    const auto p1 = body.find('|');
    const auto p2 = body.find('|', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) throw ArgumentError("malformed table key: " + key);
    return {body.substr(0, p1), body.substr(p1 + 1, p2 - p1 - 1), body.substr(p2 + 1)};
}

} // namespace detail

inline std::string key_string(const HodgeKey& k)
{
    return "(" + std::to_string(k.g) + "|" + detail::join_ints(k.nu, ',') + "|" + std::to_string(k.j) + ")";
}

inline std::string key_string(const CubicKey& k)
{
    return "(" + std::to_string(k.g) + "|" + detail::join_ints(k.nu, ',') + "|" +
           detail::join_ints({k.j[0], k.j[1], k.j[2]}, ',') + ")";
}

inline HodgeKey parse_hodge_key(const std::string& text)
{
    const auto f = detail::split_key(text);
    return {std::stoi(f[0]), sorted_exponents(detail::split_ints(f[1], ',')), std::stoi(f[2])};
}

inline CubicKey parse_cubic_key(const std::string& text)
{
    const auto f = detail::split_key(text);
    const auto j = detail::split_ints(f[2], ',');
    if (j.size() != 3) throw ArgumentError("cubic key needs three lambda indices: " + text);
    return {std::stoi(f[0]), sorted_exponents(detail::split_ints(f[1], ',')), {j[0], j[1], j[2]}};
}

/// Entries keyed by (genus, sorted psi exponents, lambda indices), plus the (g,n) pairs covered.
template <class Key>
class BasicTable {
public:
    void set(Key key, Rational value)
    {
        key.nu = sorted_exponents(std::move(key.nu));
        auto [it, fresh] = entries_.try_emplace(key, value);
        if (!fresh && it->second != value)
            throw VerificationError("conflicting values for " + key_string(key) + ": " + to_string(it->second) +
                                    " vs " + to_string(value));
    }

    std::optional<Rational> find(Key key) const
    {
        key.nu = sorted_exponents(std::move(key.nu));
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<Key, Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    void mark_covered(int g, int n) { covered_.insert({g, n}); }
    bool covers(int g, int n) const { return covered_.count({g, n}) > 0; }
    const std::set<std::pair<int, int>>& covered() const { return covered_; }

private:
    std::map<Key, Rational> entries_;
    std::set<std::pair<int, int>> covered_;
};

using HodgeTable = BasicTable<HodgeKey>;
using CubicHodgeTable = BasicTable<CubicKey>;

template <class Key>
nlohmann::json to_json(const BasicTable<Key>& table)
{
    nlohmann::json j;
    j["schema"] = kTableSchema;
    j["kind"] = std::is_same_v<Key, HodgeKey> ? "linear" : "cubic";
    j["covered"] = nlohmann::json::array();
    for (auto [g, n] : table.covered()) j["covered"].push_back({g, n});
    j["entries"] = nlohmann::json::object();
    for (const auto& [key, value] : table.entries()) j["entries"][key_string(key)] = to_string(value);
    return j;
}

template <class Key>
BasicTable<Key> table_from_json(const nlohmann::json& j)
{
    if (j.at("schema") != kTableSchema) throw ArgumentError("unsupported table schema");
    const std::string kind = std::is_same_v<Key, HodgeKey> ? "linear" : "cubic";
    if (j.at("kind") != kind) throw ArgumentError("expected a " + kind + " table");
    BasicTable<Key> table;
    for (const auto& gn : j.at("covered")) table.mark_covered(gn.at(0).get<int>(), gn.at(1).get<int>());
    for (const auto& [text, value] : j.at("entries").items()) {
        if constexpr (std::is_same_v<Key, HodgeKey>) table.set(parse_hodge_key(text), parse_rational(value.template get<std::string>()));
        else table.set(parse_cubic_key(text), parse_rational(value.template get<std::string>()));
    }
    return table;
}

inline std::string to_csv(const HodgeTable& table)
{
    std::string out = "g,nu,j,value\n";
    for (const auto& [k, v] : table.entries())
        out += std::to_string(k.g) + "," + detail::join_ints(k.nu, ' ') + "," + std::to_string(k.j) + "," + to_string(v) + "\n";
    return out;
}

inline std::string to_csv(const CubicHodgeTable& table)
{
    std::string out = "g,nu,j1,j2,j3,value\n";
    for (const auto& [k, v] : table.entries())
        out += std::to_string(k.g) + "," + detail::join_ints(k.nu, ' ') + "," + std::to_string(k.j[0]) + "," +
               std::to_string(k.j[1]) + "," + std::to_string(k.j[2]) + "," + to_string(v) + "\n";
    return out;
}

/// Polynomials in lambda_1..lambda_g modulo the even-degree parts of c(E) c(E^dual) = 1.
class LambdaRing {
public:
    using Monomial = std::vector<int>; // exponent of lambda_i at index i-1

    explicit LambdaRing(int g) : g_(g)
    {
        if (g < 0) throw ArgumentError("negative genus");
    }

    int genus() const { return g_; }

    /// lambda_{i_1} ... lambda_{i_k}; indices 0 contribute 1. Returns nullopt if any index exceeds g.
    std::optional<Monomial> product(std::initializer_list<int> indices) const
    {
        Monomial m(static_cast<std::size_t>(g_), 0);
        for (int i : indices) {
            if (i < 0 || i > g_) return std::nullopt;
            if (i > 0) ++m[static_cast<std::size_t>(i - 1)];
        }
        return m;
    }

    const std::vector<Monomial>& basis(int degree) { return graded(degree).basis; }

    /// Normal form as coefficients on basis(degree(m)).
    std::vector<Rational> normal_form(const Monomial& m)
    {
        const Graded& gr = graded(degree_of(m));
        return gr.normal.at(m);
    }

    static int degree_of(const Monomial& m)
    {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(i + 1) * m[i];
        return d;
    }

private:
    struct Graded {
        std::vector<Monomial> basis;
        std::map<Monomial, std::vector<Rational>> normal;
    };

    std::vector<Monomial> monomials(int degree) const
    {
        std::vector<Monomial> out;
        Monomial cur(static_cast<std::size_t>(g_), 0);
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx < 0) {
                if (left == 0) out.push_back(cur);
                return;
            }
            const int w = idx + 1;
            for (int e = left / w; e >= 0; --e) {
                cur[static_cast<std::size_t>(idx)] = e;
                rec(idx - 1, left - e * w);
            }
            cur[static_cast<std::size_t>(idx)] = 0;
        };
        if (degree < 0) return out;
        if (g_ == 0) {
            if (degree == 0) out.push_back(cur);
            return out;
        }
        rec(g_ - 1, degree);
        return out;
    }

    const Graded& graded(int degree)
    {
        if (auto it = cache_.find(degree); it != cache_.end()) return it->second;
        const std::vector<Monomial> mons = monomials(degree);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;

        Matrix rel;
        for (int k = 1; 2 * k <= degree && k <= g_; ++k) {
            for (const Monomial& m : monomials(degree - 2 * k)) {
                std::vector<Rational> row(mons.size());
                for (int i = 0; i <= 2 * k; ++i) {
                    const int l = 2 * k - i;
                    auto p = product({i, l});
                    if (!p) continue;
                    Monomial prod = *p;
                    for (std::size_t t = 0; t < prod.size(); ++t) prod[t] += m[t];
                    row[index.at(prod)] += sign_power(l);
                }
                rel.push_back(std::move(row));
            }
        }
        const auto pivots = row_reduce(rel, static_cast<int>(mons.size()));
        std::vector<bool> is_pivot(mons.size(), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

        Graded gr;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if (!is_pivot[c]) {
                free_cols.push_back(c);
                gr.basis.push_back(mons[c]);
            }
        for (std::size_t c = 0; c < mons.size(); ++c) {
            std::vector<Rational> nf(free_cols.size());
            if (!is_pivot[c]) {
                for (std::size_t b = 0; b < free_cols.size(); ++b) nf[b] = (free_cols[b] == c) ? 1 : 0;
            } else {
                const auto r = static_cast<std::size_t>(std::find(pivots.begin(), pivots.end(), static_cast<int>(c)) - pivots.begin());
                for (std::size_t b = 0; b < free_cols.size(); ++b) nf[b] = -rel[r][free_cols[b]];
            }
            gr.normal.emplace(mons[c], std::move(nf));
        }
        return cache_.emplace(degree, std::move(gr)).first->second;
    }

    int g_;
    std::map<int, Graded> cache_;
};

namespace detail {

inline void check_table_budget(int g_max, int n_max, int grid_budget, int genus_cap)
{
    if (g_max < 0 || n_max < 1) throw ArgumentError("table budget needs g_max >= 0 and n_max >= 1");
    if (g_max > genus_cap) throw ArgumentError("budget exceeded: genus above " + std::to_string(genus_cap));
    for (int g = 0; g <= g_max; ++g)
        for (int n = 1; n <= n_max; ++n)
            if (is_stable(g, n) && n * (3 * g - 2 + n) > grid_budget)
                throw ArgumentError("budget exceeded at (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")");
}

// Calls f(index, z) for every grid point z in {1..D}^n, last coordinate fastest.
template <class F>
void for_each_grid_point(int nodes, int vars, F&& f)
{
    std::vector<int> z(static_cast<std::size_t>(vars), 1);
    std::size_t idx = 0;
    while (true) {
        f(idx++, z);
        int k = vars - 1;
        while (k >= 0 && z[static_cast<std::size_t>(k)] == nodes) z[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) break;
        ++z[static_cast<std::size_t>(k)];
    }
}

// [u^{2g-2}] of the connected series at z, divided by prod z (and rescaled for the cubic flavor).
inline Rational grid_value(int g, const std::vector<int>& z, const Flavor& flavor)
{
    const Series s = connected_series({z, flavor}, 2 * g - 1);
    if (!s.has_parity(0)) throw VerificationError("odd powers of u in a connected series");
    const GaussRat c = s.coefficient(2 * g - 2);
    if (!c.is_real()) throw VerificationError("non-real connected coefficient");
    Rational v = c.re();
    for (int x : z) v /= x;
    if (flavor.is_cubic()) {
        const Rational& a = *flavor.cubic_a;
        v /= pow(a * (a + 1), g - 1);
    }
    return v;
}

inline std::vector<Rational> interpolated_coefficients(int g, int n, const Flavor& flavor)
{
    const int nodes = 3 * g - 2 + n;
    std::vector<Rational> values;
    for_each_grid_point(nodes, n, [&](std::size_t, const std::vector<int>& z) { values.push_back(grid_value(g, z, flavor)); });
    return interpolate_grid(std::move(values), nodes, n);
}

// Exponent tuple stored at a flat grid index.
inline std::vector<int> exponents_at(std::size_t idx, int nodes, int vars)
{
    std::vector<int> e(static_cast<std::size_t>(vars));
    for (int k = vars - 1; k >= 0; --k) {
        e[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(nodes));
        idx /= static_cast<std::size_t>(nodes);
    }
    return e;
}

} // namespace detail

/// Linear Hodge integrals for all stable (g,n) with g <= g_max, 1 <= n <= n_max.
inline HodgeTable extract_linear_table(int g_max, int n_max)
{
    detail::check_table_budget(g_max, n_max, kLinearGridBudget, kMaxTableGenus);
    HodgeTable table;
    for (int g = 0; g <= g_max; ++g) {
        for (int n = 1; n <= n_max; ++n) {
            if (!is_stable(g, n)) continue;
            const int nodes = 3 * g - 2 + n;
            const int dimension = 3 * g - 3 + n;
            const auto coeffs = detail::interpolated_coefficients(g, n, Flavor::linear());
            for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
                const auto nu = detail::exponents_at(idx, nodes, n);
                int total = 0;
                for (int x : nu) total += x;
                const int j = dimension - total;
                if (j < 0 || j > g) {
                    if (coeffs[idx] != 0)
                        throw VerificationError("nonzero coefficient outside 0 <= j <= g at " +
                                                key_string(HodgeKey{g, nu, j}));
                    continue;
                }
                table.set({g, nu, j}, sign_power(j) * coeffs[idx]);
            }
            table.mark_covered(g, n);
        }
    }
    return table;
}

/// Special cubic Hodge integrals for all stable (g,n) with g <= g_max, 1 <= n <= n_max.
inline CubicHodgeTable extract_cubic_table(int g_max, int n_max, const std::vector<Rational>& a_nodes)
{
    detail::check_table_budget(g_max, n_max, kCubicGridBudget, kMaxCubicGenus);
    const std::set<Rational> distinct(a_nodes.begin(), a_nodes.end());
    if (distinct.size() != a_nodes.size()) throw ArgumentError("a_nodes must be distinct");
    if (static_cast<int>(a_nodes.size()) < (g_max + 1) * (g_max + 1))
        throw ArgumentError("need at least (g_max+1)^2 a_nodes");
    for (const Rational& a : a_nodes)
        if (a == 0 || a == -1) throw ArgumentError("a_nodes must avoid 0 and -1");

    CubicHodgeTable table;
    for (int g = 0; g <= g_max; ++g) {
        LambdaRing ring(g);
        for (int n = 1; n <= n_max; ++n) {
            if (!is_stable(g, n)) continue;
            const int nodes = 3 * g - 2 + n;
            const int dimension = 3 * g - 3 + n;
            std::vector<std::vector<Rational>> per_node;
            for (const Rational& a : a_nodes) per_node.push_back(detail::interpolated_coefficients(g, n, Flavor::cubic(a)));

            for (std::size_t idx = 0; idx < per_node.front().size(); ++idx) {
                const auto nu = detail::exponents_at(idx, nodes, n);
                if (!std::is_sorted(nu.begin(), nu.end(), std::greater<>())) continue; // symmetric copies
                int total = 0;
                for (int x : nu) total += x;
                const int J = dimension - total;
                std::vector<Rational> rhs;
                for (const auto& c : per_node) rhs.push_back(c[idx]);
                const auto& basis = J >= 0 ? ring.basis(J) : std::vector<LambdaRing::Monomial>{};
                if (basis.empty()) {
                    for (const Rational& r : rhs)
                        if (r != 0) throw VerificationError("nonzero coefficient with no admissible lambda monomial at g=" +
                                                            std::to_string(g) + " nu=" + detail::join_ints(nu, ','));
                    continue;
                }
                // ordered lambda-index triples of total degree J and their normal forms
                std::vector<std::pair<std::array<int, 3>, std::vector<Rational>>> triples;
                for (int j1 = 0; j1 <= g; ++j1)
                    for (int j2 = 0; j2 <= g; ++j2) {
                        const int j3 = J - j1 - j2;
                        if (j3 < 0 || j3 > g) continue;
                        triples.push_back({{j1, j2, j3}, ring.normal_form(*ring.product({j1, j2, j3}))});
                    }
                Matrix rows;
                for (const Rational& a : a_nodes) {
                    const Rational t[3] = {-1, -1 / a, 1 / (a + 1)};
                    std::vector<Rational> row(basis.size());
                    for (const auto& [js, nf] : triples) {
                        const Rational w = pow(t[0], js[0]) * pow(t[1], js[1]) * pow(t[2], js[2]);
                        for (std::size_t b = 0; b < basis.size(); ++b) row[b] += w * nf[b];
                    }
                    rows.push_back(std::move(row));
                }
                const auto x = solve_exact(rows, rhs);
                for (const auto& [js, nf] : triples) {
                    Rational v = 0;
                    for (std::size_t b = 0; b < basis.size(); ++b) v += nf[b] * x[b];
                    table.set({g, nu, js}, v);
                }
            }
            table.mark_covered(g, n);
        }
    }
    return table;
}

/// int lambda_j prod psi^nu for any stable (g,n): table lookups where covered,
/// otherwise string and dilaton reduction down to covered or base cases.
class LinearHodge {
public:
    explicit LinearHodge(HodgeTable table) : table_(std::move(table)) {}

    const HodgeTable& table() const { return table_; }

    Rational value(int g, std::vector<int> nu, int j) const
    {
        const int n = static_cast<int>(nu.size());
        if (!is_stable(g, n)) throw ArgumentError("unstable (g,n) in a Hodge integral");
        for (int x : nu)
            if (x < 0) return 0;
        if (j < 0 || j > g) return 0;
        int total = 0;
        for (int x : nu) total += x;
        if (total + j != 3 * g - 3 + n) return 0;
        nu = sorted_exponents(std::move(nu));
        const HodgeKey key{g, nu, j};
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        const Rational v = compute(g, nu, j);
        std::lock_guard lock(mutex_);
        memo_.emplace(key, v);
        return v;
    }

private:
    Rational compute(int g, const std::vector<int>& nu, int j) const
    {
        const int n = static_cast<int>(nu.size());
        if (table_.covers(g, n)) {
            auto v = table_.find({g, nu, j});
            if (!v) throw VerificationError("table is missing " + key_string(HodgeKey{g, nu, j}));
            return *v;
        }
        if (is_stable(g, n - 1)) {
            // nu is sorted decreasingly, so 0 and 1 sit at the back
            if (nu.back() == 0) {
                std::vector<int> rest(nu.begin(), nu.end() - 1);
                Rational s = 0;
                for (std::size_t k = 0; k < rest.size(); ++k) {
                    if (rest[k] == 0) continue;
                    auto lowered = rest;
                    --lowered[k];
                    s += value(g, lowered, j);
                }
                return s;
            }
            if (nu.back() == 1) {
                std::vector<int> rest(nu.begin(), nu.end() - 1);
                return Rational(2 * g - 3 + n) * value(g, rest, j);
            }
        }
        if (g == 0 && n == 3) return 1;
        if (g == 1 && n == 1) return make_rational(1, 24);
        throw ArgumentError("beyond table budget: " + key_string(HodgeKey{g, nu, j}));
    }

    HodgeTable table_;
    mutable std::mutex mutex_;
    mutable std::map<HodgeKey, Rational> memo_;
};

} // namespace hodge
