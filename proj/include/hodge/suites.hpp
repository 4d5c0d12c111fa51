#pragma once

// Named verification suites. Each suite is a list of independent checks run on a
// small thread pool; reports are sorted by (check, problem) so output does not
// depend on scheduling.

#include "hodge/fock.hpp"
#include "hodge/localization.hpp"
#include "hodge/oracles.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

namespace hodge {

struct SuiteConfig {
    int extra_order = 8;                                   // compare through valuation + extra_order
    std::vector<Rational> a_values{1, 2, 3};
    int max_degree = 3;                                    // bilinear relations: d <= max_degree
    int bilinear_order = 4;                                // genus <= 2 vertex data
    int energy = 6;                                        // Fock-space cutoff N
    unsigned seed = 20240611;
    unsigned threads = 0;                                  // 0: hardware concurrency
    std::string cache_dir;                                 // empty: no on-disk table cache

    nlohmann::json json() const
    {
        nlohmann::json as = nlohmann::json::array();
        for (const auto& a : a_values) as.push_back(to_string(a));
        return {{"extra_order", extra_order}, {"a_values", as},           {"max_degree", max_degree},
                {"bilinear_order", bilinear_order}, {"energy", energy}, {"seed", seed}};
    }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckReport> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.passed; });
    }

    nlohmann::json json(bool with_details = true) const
    {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json j = c.json();
            if (!with_details) j.erase("details");
            list.push_back(std::move(j));
        }
        nlohmann::json out{{"suite", suite}, {"status", passed() ? "pass" : "fail"}, {"checks", list}};
        for (const auto& c : checks)
            if (!c.passed) {
                out["first_failure"] = {{"check", c.name}, {"problem", c.problem}, {"mismatch", c.first_mismatch}};
                break;
            }
        return out;
    }
};

using CheckTask = std::function<CheckReport()>;

/// Runs tasks concurrently. A VerificationError becomes a failed report; argument
/// errors are configuration problems and are rethrown after all workers stop.
inline std::vector<CheckReport> run_checks(const std::vector<CheckTask>& tasks, unsigned threads)
{
    std::vector<CheckReport> out(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr config_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                out[i] = tasks[i]();
            } catch (const VerificationError& e) {
                out[i] = CheckReport{"error", {{"task", i}}, {}, false, {{"reason", e.what()}}, nullptr};
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!config_error) config_error = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (config_error) std::rethrow_exception(config_error);
    std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::make_pair(a.name, a.problem.dump()) < std::make_pair(b.name, b.problem.dump());
    });
    return out;
}

// ---------------------------------------------------------------------------------------
// Tables, optionally cached on disk as JSON.

namespace detail {

template <class Table>
Table cached_table(const std::string& dir, const std::string& file, const std::function<Table()>& make)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const void>> memo;
    const std::string key = dir + "|" + file;
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *std::static_pointer_cast<const Table>(it->second);
    std::optional<Table> table;
    namespace fs = std::filesystem;
    const fs::path path = dir.empty() ? fs::path() : fs::path(dir) / file;
    if (!dir.empty() && fs::exists(path)) {
        try {
            std::ifstream in(path);
            using Key = std::conditional_t<std::is_same_v<Table, HodgeTable>, HodgeKey, CubicKey>;
            table = table_from_json<Key>(nlohmann::json::parse(in));
        } catch (const std::exception&) {
            table.reset(); // unreadable cache entries are rebuilt
        }
    }
    if (!table) {
        table = make();
        if (!dir.empty()) {
            fs::create_directories(dir);
            const fs::path tmp = path.string() + ".tmp";
            std::ofstream(tmp) << to_json(*table).dump(1) << '\n';
            fs::rename(tmp, path);
        }
    }
    auto stored = std::make_shared<const Table>(*table);
    memo.emplace(key, stored);
    return *stored;
}

} // namespace detail

inline HodgeTable linear_table(int g_max, int n_max, const std::string& cache_dir = {})
{
    return detail::cached_table<HodgeTable>(cache_dir,
                                            "linear-g" + std::to_string(g_max) + "-n" + std::to_string(n_max) + ".json",
                                            [=] { return extract_linear_table(g_max, n_max); });
}

inline std::vector<Rational> default_cubic_nodes()
{
    std::vector<Rational> nodes;
    for (long a = 1; a <= 9; ++a) nodes.push_back(a);
    return nodes;
}

inline CubicHodgeTable cubic_table(int g_max, int n_max, const std::string& cache_dir = {})
{
    return detail::cached_table<CubicHodgeTable>(
        cache_dir, "cubic-g" + std::to_string(g_max) + "-n" + std::to_string(n_max) + "-a1to9.json",
        [=] { return extract_cubic_table(g_max, n_max, default_cubic_nodes()); });
}

// ---------------------------------------------------------------------------------------
// Hodge-side ELSV series.

/// Connected linear series at integer arguments built from Hodge integrals:
/// sum_g u^{2g-2} prod z_i sum (-1)^j <lambda_j tau_nu>_g prod z_i^{nu_i}, with the
/// unstable terms 1/z and z_1 z_2/(z_1+z_2).
inline Series linear_connected_from_hodge(const LinearHodge& h, const std::vector<int>& z, int order)
{
    const int n = static_cast<int>(z.size());
    std::vector<GaussRat> dense;
    for (int g = 0; 2 * g - 2 < order; ++g) {
        Rational c = 0;
        if (g == 0 && n == 1) {
            c = make_rational(1, z[0]);
        } else if (g == 0 && n == 2) {
            c = make_rational(z[0] * z[1], z[0] + z[1]);
        } else {
            const int dim = 3 * g - 3 + n;
            for (int j = 0; j <= std::min(g, dim); ++j) {
                // all exponent vectors with sum dim - j
                std::vector<int> nu(static_cast<std::size_t>(n), 0);
                const int total = dim - j;
                std::function<void(int, int)> rec = [&](int pos, int left) {
                    if (pos == n - 1) {
                        nu[static_cast<std::size_t>(pos)] = left;
                        Rational mono = sign_power(j) * h.value(g, nu, j);
                        if (mono == 0) return;
                        for (int i = 0; i < n; ++i) mono *= pow(Rational(z[static_cast<std::size_t>(i)]), nu[static_cast<std::size_t>(i)]);
                        c += mono;
                        return;
                    }
                    for (int x = 0; x <= left; ++x) {
                        nu[static_cast<std::size_t>(pos)] = x;
                        rec(pos + 1, left - x);
                    }
                };
                rec(0, total);
            }
            for (int x : z) c *= x;
        }
        dense.emplace_back(c);
        dense.emplace_back(0);
    }
    return Series::from_coefficients(-2, std::move(dense), order);
}

/// Disconnected linear series at z from the Hodge side.
inline Series linear_disconnected_from_hodge(const LinearHodge& h, const Partition& mu, int order)
{
    const int n = mu.length();
    const int work = order + 2 * (n - 1);
    SubsetFamily conn;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<int> parts;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) parts.push_back(mu[i]);
        conn.emplace(s, linear_connected_from_hodge(h, parts, work));
    }
    return require_order(connected_to_disconnected(conn, n).at((1u << n) - 1u), order, "hodge side");
}

// ---------------------------------------------------------------------------------------
// Suites.

namespace detail {

inline nlohmann::json parts_json(const Partition& p) { return p.parts(); }

inline CheckReport series_check(const std::string& name, nlohmann::json problem, const Series& actual,
                                const Series& expected, int order)
{
    CheckReport r{name, std::move(problem), {}, true, nullptr, nullptr};
    const int from = std::min(actual.valuation(), expected.valuation());
    for (int k = from; k < order; ++k) r.compared_orders.push_back(k);
    compare_quiet(r, name, actual, expected, from, order);
    return r;
}

inline std::vector<Partition> elsv_partitions() { return {{1}, {2}, {1, 1}, {3}, {2, 1}}; }

} // namespace detail

/// ELSV working form: character sum vs transposition counts, closed forms, Hodge side.
inline std::vector<CheckTask> elsv_tasks(const SuiteConfig& cfg)
{
    std::vector<CheckTask> tasks;
    const int order = cfg.extra_order;
    for (const Partition& mu : detail::elsv_partitions()) {
        tasks.push_back([mu, order] {
            return detail::series_check("elsv_counts", {{"mu", mu.parts()}, {"order", order}}, elsv_rhs(mu, order),
                                        hurwitz_count_series(mu, order), order);
        });
        tasks.push_back([mu, cache = cfg.cache_dir] {
            static std::mutex mutex;
            static std::shared_ptr<LinearHodge> h;
            {
                std::lock_guard lock(mutex);
                if (!h) h = std::make_shared<LinearHodge>(linear_table(3, 2, cache));
            }
            // genus <= 3 data: connected pieces through u^4
            const int o = mu.length() == 1 ? 5 : 3;
            return detail::series_check("elsv_hodge", {{"mu", mu.parts()}, {"order", o}},
                                        linear_disconnected_from_hodge(*h, mu, o), elsv_rhs(mu, o), o);
        });
    }
    tasks.push_back([order] {
        return detail::series_check("elsv_closed", {{"mu", {1}}, {"order", order}}, elsv_rhs(Partition{1}, order),
                                    Series::monomial(1, -2, order), order);
    });
    tasks.push_back([order] {
        const Series cosh = (exp_linear(1, order + 4) + exp_linear(-1, order + 4)) / GaussRat(2);
        return detail::series_check("elsv_closed", {{"mu", {1, 1}}, {"order", order}}, elsv_rhs(Partition{1, 1}, order),
                                    cosh.shifted(-4), order);
    });
    return tasks;
}

/// GMV internal consistency: a -> -a-1 symmetry and the 1-point closed form.
inline std::vector<CheckTask> gmv_tasks(const SuiteConfig& cfg)
{
    std::vector<CheckTask> tasks;
    std::vector<Rational> as = cfg.a_values;
    as.push_back(make_rational(1, 2));
    std::sort(as.begin(), as.end());
    as.erase(std::unique(as.begin(), as.end()), as.end());
    for (const Rational& a : as) {
        for (int d = 1; d <= 4; ++d)
            for (const Partition& mu : partitions(d)) {
                const int order = -2 * mu.length() + cfg.extra_order;
                tasks.push_back([mu, a, order] {
                    return detail::series_check("gmv_symmetry", {{"mu", mu.parts()}, {"a", to_string(a)}, {"order", order}},
                                                gmv_rhs(mu, a, order), gmv_rhs(mu, -a - 1, order), order);
                });
            }
        for (int m = 1; m <= 4; ++m) {
            const int order = -2 + cfg.extra_order;
            tasks.push_back([m, a, order] {
                return detail::series_check("gmv_one_point", {{"m", m}, {"a", to_string(a)}, {"order", order}},
                                            one_point_cubic(m, a, order), gmv_rhs(Partition{m}, a, order), order);
            });
        }
    }
    return tasks;
}

inline std::vector<std::vector<int>> marking_vectors(int n, int max_total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[static_cast<std::size_t>(pos)] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, max_total);
    return out;
}

/// Bilinear localization relations, the lambda_g partition sum and a-polynomiality.
inline std::vector<CheckTask> bilinear_tasks(const SuiteConfig& cfg)
{
    std::vector<CheckTask> tasks;
    auto loc = std::make_shared<std::shared_ptr<Localization>>();
    auto loc_mutex = std::make_shared<std::mutex>();
    auto get = [loc, loc_mutex, cache = cfg.cache_dir]() -> const Localization& {
        std::lock_guard lock(*loc_mutex);
        if (!*loc) *loc = std::make_shared<Localization>(linear_table(2, 3, cache));
        return **loc;
    };
    for (int d = 1; d <= cfg.max_degree; ++d)
        for (int n = 1; n <= 2; ++n)
            for (const auto& nu : marking_vectors(n, d - 1))
                for (const Rational& a : cfg.a_values) {
                    MarkedProblem p;
                    p.nu = nu;
                    p.d = d;
                    p.a = a;
                    p.order = cfg.bilinear_order;
                    tasks.push_back([p, get] { return verify_bilinear(p, get()); });
                }
    for (int g = 1; g <= 3; ++g)
        for (int d = 1; d <= cfg.max_degree + 1; ++d) {
            MarkedProblem p;
            p.nu = {d - 1};
            p.d = d;
            tasks.push_back([g, p] { return igsum_check(g, p); });
            if (d >= 2) {
                p.nu = {d - 2, 1};
                tasks.push_back([g, p] { return igsum_check(g, p); });
            }
        }
    for (const std::vector<int>& args : {std::vector<int>{1}, {2}, {3}, {1, 1}, {2, 1}})
        for (int g = 0; g <= 2; ++g) tasks.push_back([args, g] { return a_polynomial_check(args, g); });
    return tasks;
}

/// Operator identities on the truncated Fock space.
inline std::vector<CheckTask> fock_tasks(const SuiteConfig& cfg)
{
    std::vector<CheckTask> tasks;
    const int n = std::min(cfg.energy, 5);
    tasks.push_back([n] { return verify_canonical_pairing(n); });
    tasks.push_back([] { return verify_e_commutators({-2, -1, 1, 2}, {-2, -1, 0, 1, 2}, GaussRat(make_rational(3, 2)), 4, 5); });
    tasks.push_back([] {
        return verify_e_commutators({-2, -1, 1, 2}, {-2, -1, 0, 1, 2}, GaussRat(make_rational(2, 7), make_rational(1, 3)), 3, 4);
    });
    std::vector<Rational> as;
    for (const Rational& a : cfg.a_values)
        if (a <= 2) as.push_back(a);
    if (as.empty()) as = {1, 2};
    for (const Rational& a : as) {
        tasks.push_back([a] { return verify_e_conjugation(4, a, 3, 6); });
        for (int d = 1; d <= 4; ++d)
            for (const Partition& mu : partitions(d)) {
                const int order = -2 * mu.length() + cfg.extra_order;
                tasks.push_back([mu, a, order] { return verify_gvo2(mu, a, order); });
            }
        for (int z = 1; z <= 3; ++z) tasks.push_back([z, a, order = -2 + cfg.extra_order] { return verify_a_vacuum({z}, a, order); });
        for (int z1 = 1; z1 <= 2; ++z1)
            for (int z2 = 1; z2 <= 2; ++z2)
                tasks.push_back([z1, z2, a, order = -4 + cfg.extra_order] { return verify_a_vacuum({z1, z2}, a, order); });
        for (int m = 1; m <= 2; ++m) tasks.push_back([m, a] { return verify_conjugation(m, a, 3, 4); });
    }
    tasks.push_back([] { return verify_schur(4, 5); });
    tasks.push_back([seed = cfg.seed] { return verify_adjoint(4, 4, seed, 4); });
    return tasks;
}

/// Tree function, Bernoulli numbers, the partition-sum identity and the two forms of R.
inline std::vector<CheckTask> identity_tasks(const SuiteConfig&)
{
    std::vector<CheckTask> tasks;
    tasks.push_back([] {
        CheckReport r{"partition_sum", {{"d_max", 8}, {"t", {"1/2", "1", "3", "-5/7"}}}, {}, true, nullptr, nullptr};
        int cases = 0;
        for (int d = 1; d <= 8; ++d)
            for (int k = 0; k <= d; ++k)
                for (const Rational& t : {make_rational(1, 2), make_rational(1), make_rational(3), make_rational(-5, 7)}) {
                    ++cases;
                    const Rational x = ident1_lhs(d, k, t), y = ident1_rhs(d, k, t);
                    if (x != y && r.passed) {
                        r.passed = false;
                        r.first_mismatch = {{"d", d}, {"k", k}, {"t", to_string(t)}, {"lhs", to_string(x)}, {"rhs", to_string(y)}};
                    }
                }
        r.details = {{"cases", cases}};
        return r;
    });
    tasks.push_back([] {
        // T = x e^T through x^12
        const int order = 13;
        std::vector<GaussRat> t(order);
        for (int k = 1; k < order; ++k) t[static_cast<std::size_t>(k)] = tree_coefficient(k);
        const Series T = Series::from_coefficients(0, t, order);
        return detail::series_check("tree_equation", {{"order", order}}, T.exp().shifted(1).truncated(order), T, order);
    });
    tasks.push_back([] {
        // x/(e^x - 1) by series inversion against the recurrence
        const int order = 24;
        const Series gen = (exp_linear(1, order + 1) - Series::constant(1, order + 1)).shifted(-1).inverse();
        std::vector<GaussRat> b;
        for (int m = 0; m < order; ++m) b.emplace_back(bernoulli(m) / Rational(factorial(m)));
        return detail::series_check("bernoulli", {{"order", order}}, Series::from_coefficients(0, b, order), gen, order);
    });
    for (const Rational& a : {Rational(1), Rational(2)})
        for (int m = 1; m <= 5; ++m)
            tasks.push_back([a, m] {
                const int order = 9;
                return detail::series_check("lnR_forms", {{"m", m}, {"a", to_string(a)}, {"order", order}},
                                            R_series_bernoulli(Rational(m), a, order), R_series_product(m, a, order), order);
            });
    return tasks;
}

/// lambda_g entries of the linear table against the closed form.
inline CheckReport lambda_g_check(const std::string& cache = {})
{
    const HodgeTable t = linear_table(2, 3, cache);
    CheckReport r{"lambda_g", {{"g_max", 2}, {"n_max", 3}}, {}, true, nullptr, nullptr};
    int checked = 0;
    for (const auto& [key, value] : t.entries())
        if (key.g >= 1 && key.j == key.g) {
            ++checked;
            const Rational expected = lam_g_value(key.g, key.nu);
            if (value != expected && r.passed) {
                r.passed = false;
                r.first_mismatch = {{"key", key_string(key)}, {"expected", to_string(expected)}, {"actual", to_string(value)}};
            }
        }
    auto named = [&](const HodgeKey& k, const Rational& v) {
        const auto found = t.find(k);
        if ((!found || *found != v) && r.passed) {
            r.passed = false;
            r.first_mismatch = {{"key", key_string(k)}, {"expected", to_string(v)}};
        }
    };
    named({1, {0}, 1}, make_rational(1, 24));
    named({2, {2}, 2}, make_rational(7, 5760));
    r.details = {{"entries", checked}};
    if (checked == 0) r.passed = false;
    return r;
}

/// Cubic table at (j2, j3) = (0, 0) against the linear table, plus a dilaton value.
inline CheckReport cubic_linear_check(const std::string& cache = {})
{
    const HodgeTable lin = linear_table(2, 3, cache);
    const CubicHodgeTable cub = cubic_table(2, 3, cache);
    CheckReport r{"cubic_linear", {{"g_max", 2}, {"n_max", 3}, {"a_nodes", "1..9"}}, {}, true, nullptr, nullptr};
    int shared = 0;
    for (const auto& [key, value] : cub.entries()) {
        if (key.j[1] != 0 || key.j[2] != 0) continue;
        const auto v = lin.find({key.g, key.nu, key.j[0]});
        if (!v) continue;
        ++shared;
        if (*v != value && r.passed) {
            r.passed = false;
            r.first_mismatch = {{"key", key_string(key)}, {"linear", to_string(*v)}, {"cubic", to_string(value)}};
        }
    }
    // psi lambda_2 lambda_1 on M_{2,1} by the dilaton equation
    const Rational mono = zero_point_cubic(2, 1, 1, 0) / 2;
    const auto dil = cub.find({2, {1}, {2, 1, 0}});
    const bool dil_ok = mono == make_rational(1, 5760) && dil && *dil == 2 * mono;
    if (!dil_ok && r.passed) {
        r.passed = false;
        r.first_mismatch = {{"key", "(2|1|2,1,0)"}, {"expected", "1/2880"}, {"actual", dil ? to_string(*dil) : "missing"}};
    }
    r.details = {{"shared_keys", shared}, {"zero_point_monomial", to_string(mono)}};
    if (shared == 0) r.passed = false;
    return r;
}

/// Genus-zero entries against the multinomial closed form.
inline CheckReport genus_zero_check(const std::string& cache = {})
{
    const HodgeTable t = linear_table(0, 5, cache);
    CheckReport r{"genus_zero", {{"n_max", 5}}, {}, true, nullptr, nullptr};
    int checked = 0;
    for (const auto& [key, value] : t.entries()) {
        ++checked;
        const Rational expected = key.j == 0 ? genus_zero_psi(key.nu) : Rational(0);
        if (value != expected && r.passed) {
            r.passed = false;
            r.first_mismatch = {{"key", key_string(key)}, {"expected", to_string(expected)}, {"actual", to_string(value)}};
        }
    }
    r.details = {{"entries", checked}};
    if (checked == 0) r.passed = false;
    return r;
}

/// String and dilaton recursions on the linear table.
inline CheckReport string_dilaton_check(const std::string& cache = {})
{
    const HodgeTable t = linear_table(2, 3, cache);
    CheckReport r{"string_dilaton", {{"g_max", 2}, {"n_max", 3}}, {}, true, nullptr, nullptr};
    auto get = [&](int g, const std::vector<int>& nu, int j) {
        return t.find({g, sorted_exponents(nu), j}).value_or(Rational(0));
    };
    int checked = 0;
    for (const auto& [key, value] : t.entries()) {
        const int n = static_cast<int>(key.nu.size());
        if (!is_stable(key.g, n - 1) || !t.covers(key.g, n - 1)) continue;
        std::vector<int> rest(key.nu.begin(), key.nu.end() - 1);
        Rational expected;
        if (key.nu.back() == 0) {
            expected = 0;
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (rest[k] > 0) {
                    auto lowered = rest;
                    --lowered[k];
                    expected += get(key.g, lowered, key.j);
                }
        } else if (key.nu.back() == 1) {
            expected = Rational(2 * key.g - 3 + n) * get(key.g, rest, key.j);
        } else {
            continue;
        }
        ++checked;
        if (value != expected && r.passed) {
            r.passed = false;
            r.first_mismatch = {{"key", key_string(key)}, {"expected", to_string(expected)}, {"actual", to_string(value)}};
        }
    }
    r.details = {{"relations", checked}};
    if (checked == 0) r.passed = false;
    return r;
}

/// Table checks: lambda_g entries, cubic/linear compatibility, genus zero and string/dilaton.
inline std::vector<CheckTask> table_tasks(const SuiteConfig& cfg)
{
    std::vector<CheckTask> tasks;
    for (auto* check : {&lambda_g_check, &cubic_linear_check, &genus_zero_check, &string_dilaton_check})
        tasks.push_back([check, cache = cfg.cache_dir] { return check(cache); });
    return tasks;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"elsv", "gmv", "bilinear", "fock", "identities", "tables"};
    return names;
}

inline std::vector<CheckTask> suite_tasks(const std::string& name, const SuiteConfig& cfg)
{
    if (name == "elsv") return elsv_tasks(cfg);
    if (name == "gmv") return gmv_tasks(cfg);
    if (name == "bilinear") return bilinear_tasks(cfg);
    if (name == "fock") return fock_tasks(cfg);
    if (name == "identities") return identity_tasks(cfg);
    if (name == "tables") return table_tasks(cfg);
    throw ArgumentError("unknown suite '" + name + "'");
}

inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg)
{
    return {name, run_checks(suite_tasks(name, cfg), cfg.threads)};
}

} // namespace hodge
