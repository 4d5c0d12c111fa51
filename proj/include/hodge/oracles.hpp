#pragma once

// Brute-force cross-checks that share no code path with the character sums or the
// table extraction: permutation counting in S_d, the genus-0 psi-integral closed
// form, and the string/dilaton recursions.

#include "hodge/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hodge {

/// #{(t_1, ..., t_r) transpositions : t_1 ... t_r = sigma} for r = 0..r_max, sigma of cycle type mu.
inline std::vector<Integer> transposition_factorizations(const Partition& mu, int r_max)
{
    const int d = mu.size();
    if (d < 1 || d > 7) throw ArgumentError("transposition_factorizations needs 1 <= |mu| <= 7");
    std::vector<int> id(static_cast<std::size_t>(d));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = id;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    // target permutation: consecutive cycles of lengths mu_i
    std::vector<int> sigma(static_cast<std::size_t>(d));
    int start = 0;
    for (int len : mu.parts()) {
        for (int k = 0; k < len; ++k) sigma[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
        start += len;
    }
    const std::size_t target = index_of(sigma);
    std::vector<Integer> counts;
    std::vector<Integer> dist(perms.size());
    dist[index_of(id)] = 1;
    for (int r = 0; r <= r_max; ++r) {
        counts.push_back(dist[target]);
        std::vector<Integer> next(perms.size());
        for (std::size_t i = 0; i < perms.size(); ++i) {
            if (dist[i] == 0) continue;
            for (int a = 0; a < d; ++a)
                for (int b = a + 1; b < d; ++b) {
                    std::vector<int> q = perms[i];
                    std::swap(q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]);
                    next[index_of(q)] += dist[i];
                }
        }
        dist = std::move(next);
    }
    return counts;
}

/// The ELSV character sum rebuilt from factorization counts:
/// (prod mu_i^mu_i/mu_i!)^{-1} sum_r count_r u^{r - |mu| - l(mu)} / r!.
inline Series hurwitz_count_series(const Partition& mu, int order)
{
    const int shift = mu.size() + mu.length();
    const int r_max = std::max(order + shift - 1, 0);
    const std::vector<Integer> counts = transposition_factorizations(mu, r_max);
    Rational pref = 1;
    for (int m : mu.parts()) pref *= ratio(ipow(m, m), factorial(m));
    std::vector<GaussRat> coeffs;
    for (int r = 0; r <= r_max; ++r) coeffs.emplace_back(ratio(counts[static_cast<std::size_t>(r)], factorial(r)) / pref);
    return Series::from_coefficients(-shift, std::move(coeffs), order);
}

/// <tau_nu>_0 = (n-3)!/prod nu_i! when sum nu = n-3, else 0.
inline Rational genus_zero_psi(const std::vector<int>& nu)
{
    const int n = static_cast<int>(nu.size());
    if (n < 3) throw ArgumentError("genus-zero integrals need n >= 3");
    int total = 0;
    Integer denom = 1;
    for (int x : nu) {
        if (x < 0) return 0;
        total += x;
        denom *= factorial(x);
    }
    if (total != n - 3) return 0;
    return ratio(factorial(n - 3), denom);
}

} // namespace hodge
