#pragma once

// Partitions, symmetric-group characters, central characters, Bernoulli
// numbers and the rooted-tree series T(x) = sum n^{n-1} x^n / n!.

#include "hodge/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

/// Integer partition stored as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;

    /// Sorts the parts into canonical order; rejects non-positive parts.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0) throw ArgumentError("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Builds a partition from a list that may contain zeros (they are dropped).
    static Partition from_padded(const std::vector<int>& parts)
    {
        std::vector<int> p;
        for (int x : parts) {
            if (x < 0) throw ArgumentError("negative part");
            if (x > 0) p.push_back(x);
        }
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    Partition conjugate() const
    {
        std::vector<int> c;
        if (parts_.empty()) return Partition();
        for (int j = 1; j <= parts_.front(); ++j) {
            int count = 0;
            for (int p : parts_) count += (p >= j);
            c.push_back(count);
        }
        return Partition(std::move(c));
    }

    /// Hook lengths of all boxes, row by row.
    std::vector<int> hooks() const
    {
        std::vector<int> h;
        const Partition c = conjugate();
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j)
                h.push_back((parts_[static_cast<std::size_t>(i)] - j - 1) + (c[j] - i - 1) + 1);
        return h;
    }

    /// Contents j - i of all boxes (0-based row i, column j).
    std::vector<int> contents() const
    {
        std::vector<int> c;
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) c.push_back(j - i);
        return c;
    }

    /// Order of the group permuting equal parts.
    Integer aut_order() const
    {
        Integer a = 1;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            a *= factorial(static_cast<long>(j - i));
            i = j;
        }
        return a;
    }

    /// Union of parts.
    Partition operator+(const Partition& other) const
    {
        std::vector<int> p = parts_;
        p.insert(p.end(), other.parts_.begin(), other.parts_.end());
        return Partition(std::move(p));
    }

    std::string str() const
    {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ')';
        return os.str();
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
    std::vector<int> parts_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d).
inline const std::vector<Partition>& partitions(int d)
{
    if (d < 0) throw ArgumentError("partitions of a negative number");
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(d, d, cur, out);
    return cache.emplace(d, std::move(out)).first->second;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing an r-border strip moves a bead
// from b to b - r; the sign is (-1)^(beads strictly between).
inline Integer mn_character(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from,
                            std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo)
{
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    std::vector<int> rest(mu.begin() + static_cast<long>(from), mu.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = mu[from];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    Integer total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int x : beta) between += (x > target && x < b);
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> nl;
        for (int k = 0; k < len; ++k) {
            int part = nb[static_cast<std::size_t>(k)] - (len - 1 - k);
            if (part > 0) nl.push_back(part);
        }
        Integer sub = mn_character(nl, mu, from + 1, memo);
        if (between % 2) total -= sub;
        else total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// chi^lambda_mu, the irreducible character of S_n at cycle type mu.
inline Integer character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size()) throw ArgumentError("character: size mismatch " + lambda.str() + " vs " + mu.str());
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
    std::lock_guard lock(mutex);
    return detail::mn_character(lambda.parts(), mu.parts(), 0, memo);
}

/// Dimension via the hook-length formula.
inline Integer dim(const Partition& lambda)
{
    Integer prod = 1;
    for (int h : lambda.hooks()) prod *= h;
    return factorial(lambda.size()) / prod;
}

inline Integer hook_product(const Partition& lambda)
{
    Integer prod = 1;
    for (int h : lambda.hooks()) prod *= h;
    return prod;
}

/// Central character of a transposition: (1/2) sum_i [(l_i - i + 1/2)^2 - (-i + 1/2)^2].
inline long f2(const Partition& lambda)
{
    long total = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        const long l = lambda[i - 1];
        total += l * (l + 1) / 2 - static_cast<long>(i) * l;
    }
    return total;
}

/// |Aut mu| * prod mu_i, the centralizer order of a permutation of type mu.
inline Integer zeta(const Partition& mu)
{
    Integer z = mu.aut_order();
    for (int p : mu.parts()) z *= p;
    return z;
}

/// B_m with B_1 = -1/2, from sum_{j<=m} binom(m+1, j) B_j = 0.
inline Rational bernoulli(int m)
{
    if (m < 0) throw ArgumentError("negative Bernoulli index");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= m) {
        const long n = static_cast<long>(cache.size());
        Rational s = 0;
        for (long j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * cache[static_cast<std::size_t>(j)];
        cache.push_back(-s / Rational(n + 1));
    }
    return cache[static_cast<std::size_t>(m)];
}

/// [x^n] T(x) = n^{n-1}/n!.
inline Rational tree_coefficient(int n)
{
    if (n < 1) throw ArgumentError("tree_coefficient needs n >= 1");
    return ratio(ipow(n, n - 1), factorial(n));
}

/// [x^n] exp(t T(x)) = t (t+n)^{n-1} / n!.
inline Rational tree_exp_coefficient(const Rational& t, int n)
{
    if (n < 0) throw ArgumentError("tree_exp_coefficient needs n >= 0");
    if (n == 0) return 1;
    Rational r = t * pow(t + n, n - 1) / Rational(factorial(n));
    r.canonicalize();
    return r;
}

/// Partition sum side of the tree-function identity.
inline Rational ident1_lhs(int d, int k, const Rational& t)
{
    if (d < 1 || k < 0) throw ArgumentError("partition-sum identity needs d >= 1, k >= 0");
    Rational total = 0;
    for (const Partition& mu : partitions(d)) {
        Rational term = pow(-t, mu.length()) / Rational(mu.aut_order());
        term *= Rational(binomial(mu.length(), k));
        for (int m : mu.parts()) term *= tree_coefficient(m);
        total += term;
    }
    return total;
}

/// Closed form (-1)^k t^k (k-t)(d-t)^{d-k-1} / (k!(d-k)!); zero for k > d.
inline Rational ident1_rhs(int d, int k, const Rational& t)
{
    if (d < 1 || k < 0) throw ArgumentError("partition-sum identity needs d >= 1, k >= 0");
    if (k > d) return 0;
    Rational r = sign_power(k) * pow(t, k) / Rational(factorial(k) * factorial(d - k));
    // at k = d the factor (k - t)(d - t)^{-1} is identically 1
    if (k < d) r *= (Rational(k) - t) * pow(Rational(d) - t, d - k - 1);
    return r;
}

} // namespace hodge
