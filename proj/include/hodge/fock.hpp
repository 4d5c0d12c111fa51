#pragma once

// Charge-zero infinite wedge, truncated by energy.
//
// Basis vectors v_lambda are stored by partition. A particle sits at each
// half-integer lambda_i - i + 1/2; below the diagram every position is filled.
// Here positions are handled as the integers s = lambda_i - i (half-integer s + 1/2).
//
// Exactness: a FockVector keeps only energies <= cutoff. When something was dropped,
// components of energy <= exact are still exact and everything else is unknown.

#include "hodge/genfun.hpp"
#include "hodge/report.hpp"

#include <nlohmann/json.hpp>

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace hodge {

/// Order of the zero series standing for an absent basis vector (exactly zero).
inline constexpr int kExactOrder = 1 << 20;

using FockTerms = std::map<Partition, Series>;

class FockVector {
public:
    explicit FockVector(int cutoff = 0) : cutoff_(cutoff), exact_(cutoff)
    {
        if (cutoff < 0) throw ArgumentError("energy cutoff must be non-negative");
    }

    static FockVector vacuum(int cutoff, int order) { return basis(Partition(), cutoff, order); }

    /// v_lambda with coefficient 1 known through u^{order-1}.
    static FockVector basis(const Partition& lambda, int cutoff, int order)
    {
        if (lambda.size() > cutoff) throw ArgumentError("basis vector above the energy cutoff");
        FockVector v(cutoff);
        v.terms_.emplace(lambda, Series::constant(1, order));
        return v;
    }

    /// Keeps terms with |lambda| <= cutoff; dropping anything makes the vector incomplete.
    static FockVector from_terms(FockTerms terms, int cutoff, bool complete, int exact)
    {
        FockVector v(cutoff);
        v.complete_ = complete;
        v.exact_ = std::min(exact, cutoff);
        for (auto& [lambda, c] : terms) {
            if (c.is_zero()) continue;
            if (lambda.size() > cutoff) {
                if (v.complete_) v.exact_ = cutoff;
                v.complete_ = false;
                continue;
            }
            v.terms_.emplace(lambda, std::move(c));
        }
        return v;
    }

    const FockTerms& terms() const { return terms_; }
    int cutoff() const { return cutoff_; }
    /// Nothing was ever dropped: every coefficient, including the absent ones, is exact.
    bool complete() const { return complete_; }
    /// Largest energy whose coefficients are exact (cutoff when complete, may be negative).
    int exact_energy() const { return complete_ ? cutoff_ : exact_; }

    int max_energy() const
    {
        int e = -1;
        for (const auto& [lambda, c] : terms_) e = std::max(e, lambda.size());
        return e;
    }

    Series coefficient(const Partition& lambda) const
    {
        if (!complete_ && lambda.size() > exact_)
            throw VerificationError("coefficient of " + lambda.str() + " was lost to truncation");
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Series(kExactOrder) : it->second;
    }

    FockVector& operator+=(const FockVector& o)
    {
        const int cut = std::min(cutoff_, o.cutoff_);
        FockTerms sum = terms_;
        for (const auto& [lambda, c] : o.terms_) {
            auto [it, fresh] = sum.emplace(lambda, c);
            if (!fresh) it->second += c;
        }
        const bool complete = complete_ && o.complete_ && cutoff_ == o.cutoff_;
        const int exact = std::min(complete_ ? cut : exact_, o.complete_ ? cut : o.exact_);
        *this = from_terms(std::move(sum), cut, complete, exact);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(const FockVector& a, const FockVector& b) { return a + b * GaussRat(-1); }

    friend FockVector operator*(const FockVector& v, const Series& c)
    {
        FockVector r = v;
        for (auto& [lambda, x] : r.terms_) x = x * c;
        std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
        return r;
    }
    friend FockVector operator*(const Series& c, const FockVector& v) { return v * c; }
    friend FockVector operator*(const FockVector& v, const GaussRat& c)
    {
        FockVector r = v;
        for (auto& [lambda, x] : r.terms_) x *= c;
        std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
        return r;
    }

    /// Smallest truncation order among the coefficients.
    int series_order() const
    {
        int o = kExactOrder;
        for (const auto& [lambda, c] : terms_) o = std::min(o, c.order());
        return o;
    }

    nlohmann::json json() const
    {
        nlohmann::json t = nlohmann::json::object();
        for (const auto& [lambda, c] : terms_) t[lambda.str()] = to_json(c);
        return {{"cutoff", cutoff_}, {"complete", complete_}, {"exact_energy", exact_energy()}, {"terms", t}};
    }

private:
    FockTerms terms_;
    int cutoff_;
    bool complete_ = true;
    int exact_;
};

/// Bilinear pairing with (v_lambda, v_mu) = delta. Throws unless the value is provably exact.
inline Series pair(const FockVector& v, const FockVector& w)
{
    auto covered = [](const FockVector& full, const FockVector& other) {
        return full.complete() && (other.complete() || full.max_energy() <= other.exact_energy());
    };
    if (!covered(v, w) && !covered(w, v)) throw VerificationError("pairing involves truncated coefficients");
    Series s(kExactOrder);
    for (const auto& [lambda, c] : v.terms()) {
        auto it = w.terms().find(lambda);
        if (it != w.terms().end()) s += c * it->second;
    }
    return s;
}

/// Linear operator on the truncated space. `min_shift`/`max_shift` bound the energy change
/// of every term; nullopt means unbounded in that direction.
struct WedgeOperator {
    std::string name;
    std::optional<int> min_shift;
    std::optional<int> max_shift;
    std::function<FockTerms(const FockTerms&)> action;

    FockVector operator()(const FockVector& v) const
    {
        FockTerms out = action(v.terms());
        if (v.complete()) return FockVector::from_terms(std::move(out), v.cutoff(), true, v.cutoff());
        // energy e of the result draws on energies up to e - min_shift of the input
        const int exact = min_shift ? v.exact_energy() + *min_shift : -1;
        return FockVector::from_terms(std::move(out), v.cutoff(), false, exact);
    }
};

inline void add_term(FockTerms& out, const Partition& lambda, const Series& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(lambda, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) out.erase(it);
}

namespace detail {

/// Integer positions s_i = lambda_i - i for i = 1..width.
inline std::vector<int> maya(const Partition& lambda, int width)
{
    std::vector<int> s(static_cast<std::size_t>(width));
    for (int i = 1; i <= width; ++i) s[static_cast<std::size_t>(i - 1)] = (i <= lambda.length() ? lambda[i - 1] : 0) - i;
    return s;
}

struct Move {
    Partition result;
    int sign;
    int from; // integer position of the moved particle
};

/// All ways to move one particle down by r (up when r < 0), with the fermionic sign.
inline std::vector<Move> particle_moves(const Partition& lambda, int r)
{
    std::vector<Move> moves;
    if (r == 0) return moves;
    const int width = lambda.length() + std::abs(r) + 1;
    const std::vector<int> s = maya(lambda, width);
    const std::set<int> filled(s.begin(), s.end());
    auto occupied = [&](int pos) { return pos < -width || filled.count(pos) > 0; };
    for (int from : s) {
        const int to = from - r;
        if (occupied(to)) continue;
        int between = 0;
        for (int x : s)
            if (x > std::min(from, to) && x < std::max(from, to)) ++between;
        std::vector<int> next;
        for (int x : s) next.push_back(x == from ? to : x);
        std::sort(next.begin(), next.end(), std::greater<>());
        std::vector<int> parts;
        for (int i = 0; i < width; ++i) parts.push_back(next[static_cast<std::size_t>(i)] + i + 1);
        moves.push_back({Partition::from_padded(parts), between % 2 == 0 ? 1 : -1, from});
    }
    return moves;
}

} // namespace detail

/// alpha_n: n < 0 adds |n|-border strips with sign (-1)^height, n > 0 removes them.
inline WedgeOperator alpha(int n)
{
    if (n == 0) throw ArgumentError("alpha_0 is not part of the charge-zero calculus");
    return {"alpha(" + std::to_string(n) + ")", -n, -n, [n](const FockTerms& in) {
                FockTerms out;
                for (const auto& [lambda, c] : in)
                    for (const auto& mv : detail::particle_moves(lambda, n))
                        add_term(out, mv.result, mv.sign == 1 ? c : -c);
                return out;
            }};
}

/// |mu> = prod alpha_{-mu_i} v_0.
inline FockVector ket(const Partition& mu, int cutoff, int order)
{
    FockVector v = FockVector::vacuum(cutoff, order);
    for (int m : mu.parts()) v = alpha(-m)(v);
    return v;
}

/// H v_lambda = |lambda| v_lambda.
inline WedgeOperator energy_operator()
{
    return {"H", 0, 0, [](const FockTerms& in) {
                FockTerms out;
                for (const auto& [lambda, c] : in) add_term(out, lambda, c * GaussRat(lambda.size()));
                return out;
            }};
}

/// F2 v_lambda = f2(lambda) v_lambda.
inline WedgeOperator f2_operator()
{
    return {"F2", 0, 0, [](const FockTerms& in) {
                FockTerms out;
                for (const auto& [lambda, c] : in) add_term(out, lambda, c * GaussRat(f2(lambda)));
                return out;
            }};
}

/// e^{c u F2}.
inline WedgeOperator exp_f2(const GaussRat& c, int order)
{
    return {"exp(F2)", 0, 0, [c, order](const FockTerms& in) {
                FockTerms out;
                for (const auto& [lambda, x] : in) add_term(out, lambda, x * exp_linear(c * GaussRat(f2(lambda)), order));
                return out;
            }};
}

/// E_r(c u): moves a particle from k to k - r with weight e^{cu(k - r/2)}; E_0 is diagonal
/// with eigenvalue sum_i (e^{cu(lambda_i - i + 1/2)} - e^{cu(-i + 1/2)}) + 1/varsigma(cu).
inline WedgeOperator E_operator(int r, const GaussRat& c, int order)
{
    if (r == 0 && c.is_zero()) throw ArgumentError("E_0(0) has a pole");
    const std::string name = "E(" + std::to_string(r) + "," + c.str() + ")";
    if (r == 0) {
        const Series reg = varsigma_series(c, order + 1).inverse();
        return {name, 0, 0, [c, order, reg](const FockTerms& in) {
                    FockTerms out;
                    for (const auto& [lambda, x] : in) {
                        Series eig = reg;
                        for (int i = 1; i <= lambda.length(); ++i) {
                            const Rational half = make_rational(1, 2);
                            eig += exp_linear(c * GaussRat(Rational(lambda[i - 1] - i + half)), order) -
                                   exp_linear(c * GaussRat(Rational(-i + half)), order);
                        }
                        add_term(out, lambda, x * eig);
                    }
                    return out;
                }};
    }
    return {name, -r, -r, [r, c, order](const FockTerms& in) {
                FockTerms out;
                for (const auto& [lambda, x] : in)
                    for (const auto& mv : detail::particle_moves(lambda, r)) {
                        const Rational k = Rational(mv.from) + make_rational(1, 2);
                        const Rational w = k - make_rational(r, 2);
                        const Series weight = exp_linear(c * GaussRat(w), order);
                        add_term(out, mv.result, x * (mv.sign == 1 ? weight : -weight));
                    }
                return out;
            }};
}

/// 1/(1 - e^{i c n u}), valuation -1.
inline Series gamma_coefficient(const GaussRat& c, int n, int order)
{
    const Series e = exp_linear(GaussRat::i() * c * GaussRat(n), order + 2);
    return (Series::constant(1, order + 2) - e).inverse();
}

namespace detail {

/// exp(sign * sum_n (1/n) gamma_coefficient(c, n) alpha_{-+n}); lowering for annihilators.
inline FockTerms gamma_action(const FockTerms& in, const GaussRat& c, int order, int sign, bool lowering,
                              int max_energy)
{
    std::map<int, Series> coefs;
    auto coef = [&](int n) -> const Series& {
        auto it = coefs.find(n);
        if (it == coefs.end())
            it = coefs.emplace(n, gamma_coefficient(c, n, order) * GaussRat(make_rational(sign, n))).first;
        return it->second;
    };
    auto step = [&](const FockTerms& v) {
        FockTerms out;
        for (const auto& [lambda, x] : v) {
            const int nmax = lowering ? lambda.size() : max_energy - lambda.size();
            for (int n = 1; n <= nmax; ++n)
                for (const auto& mv : particle_moves(lambda, lowering ? n : -n))
                    add_term(out, mv.result, (mv.sign == 1 ? x : -x) * coef(n));
        }
        return out;
    };
    FockTerms result = in;
    FockTerms term = in;
    for (int k = 1; !term.empty(); ++k) {
        term = step(term);
        for (auto& [lambda, x] : term) x = x / GaussRat(k);
        for (const auto& [lambda, x] : term) add_term(result, lambda, x);
    }
    return result;
}

} // namespace detail

/// Gamma_+(c u) = exp(sum_{n>0} (1/n) (1 - e^{icnu})^{-1} alpha_n); `inverse` negates the exponent.
inline WedgeOperator gamma_plus(const GaussRat& c, int order, bool inverse = false)
{
    return {inverse ? "Gamma+^-1" : "Gamma+", std::nullopt, 0, [c, order, inverse](const FockTerms& in) {
                return detail::gamma_action(in, c, order, inverse ? -1 : 1, true, INT_MAX);
            }};
}

/// Gamma_-(c u), the transpose of Gamma_+(c u); terms above `cutoff` are never generated.
inline WedgeOperator gamma_minus(const GaussRat& c, int order, int cutoff, bool inverse = false)
{
    return {inverse ? "Gamma-^-1" : "Gamma-", 0, std::nullopt, [c, order, cutoff, inverse](const FockTerms& in) {
                FockTerms out = detail::gamma_action(in, c, order, inverse ? -1 : 1, false, cutoff + 1);
                return out;
            }};
}

/// Coefficient of E_l(auz) in A(z; a) before the R/((a+1)u) prefactor.
inline Series A_coefficient(int z, const Rational& a, int l, int order)
{
    if (l < -z) return Series(kExactOrder);
    auto numerator = [&](int j) {
        // e^{auz/2} - e^{-auz/2 - (z+j-1)u}
        const Rational half = a * z / 2;
        return exp_linear(GaussRat(half), order + 2) - exp_linear(GaussRat(Rational(-half - (z + j - 1))), order + 2);
    };
    auto denominator = [&](int j) {
        // 1 - e^{-u(z+j)}
        return Series::constant(1, order + 2) - exp_linear(GaussRat(-(z + j)), order + 2);
    };
    Series c = Series::constant(1, order + 2);
    if (l >= 0) {
        for (int j = 1; j <= l; ++j) c = c * numerator(j) * denominator(j).inverse();
    } else {
        for (int j = l + 1; j <= 0; ++j) {
            const Series num = numerator(j);
            if (num.is_zero()) throw ArgumentError("A(z;a): vanishing factor in the reciprocal coefficient");
            c = c * denominator(j) * num.inverse();
        }
    }
    return c;
}

/// A(z; a) = R(z,a,u)/((a+1)u) * sum_{l >= -z} c_l E_l(auz).
inline WedgeOperator A_operator(int z, const Rational& a, int order)
{
    if (z <= 0) throw ArgumentError("A(z;a) needs z >= 1");
    if (a == 0 || a == -1) throw ArgumentError("A(z;a) needs a not in {0, -1}");
    const int inner = order + 2 * z + 4;
    const Series pref = (R_series(Rational(z), a, inner) / GaussRat(Rational(a + 1))).shifted(-1);
    const GaussRat s(Rational(a * z));
    return {"A(" + std::to_string(z) + ")", std::nullopt, z, [z, a, inner, pref, s](const FockTerms& in) {
                FockTerms out;
                int top = 0;
                for (const auto& [lambda, x] : in) top = std::max(top, lambda.size());
                for (int l = -z; l <= top; ++l) {
                    const Series c = pref * A_coefficient(z, a, l, inner);
                    if (c.is_zero()) continue;
                    for (const auto& [mu, y] : E_operator(l, s, inner).action(in)) add_term(out, mu, y * c);
                }
                return out;
            }};
}

/// <X> for the vector X v_0.
inline Series vacuum_expectation(const FockVector& xv) { return xv.coefficient(Partition()); }

// ---------------------------------------------------------------------------------------
// Verification

inline const std::vector<Partition>& partitions_up_to(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> all;
    for (int k = 0; k <= n; ++k)
        for (const auto& p : partitions(k)) all.push_back(p);
    return cache[n] = all;
}

inline bool compare_vectors(CheckReport& report, const std::string& label, const FockVector& actual,
                            const FockVector& expected, int order)
{
    std::set<Partition> keys;
    for (const auto& [p, c] : actual.terms()) keys.insert(p);
    for (const auto& [p, c] : expected.terms()) keys.insert(p);
    for (const auto& p : keys)
        if (!compare_quiet(report, label + " at " + p.str(), actual.coefficient(p), expected.coefficient(p), -kExactOrder / 2,
                           order)) {
            return false;
        }
    return true;
}

/// <<mu|lambda>> = zeta(mu) delta for all sizes <= n.
inline CheckReport verify_canonical_pairing(int n)
{
    CheckReport report{"canonical_pairing", {{"max_size", n}}, {}, true, nullptr, nullptr};
    std::map<Partition, FockVector> kets;
    for (const auto& mu : partitions_up_to(n)) kets.emplace(mu, ket(mu, n, 1));
    int checked = 0;
    for (const auto& [mu, v] : kets)
        for (const auto& [lambda, w] : kets) {
            const Series expected = Series::constant(mu == lambda ? GaussRat(Rational(zeta(mu))) : GaussRat(), 1);
            compare_quiet(report, "<<" + mu.str() + "|" + lambda.str() + ">>", pair(v, w), expected, 0, 1);
            ++checked;
        }
    report.details = {{"pairs", checked}};
    return report;
}

/// [alpha_n, E_m(cu)] = varsigma(n c u) E_{m+n}(cu) on every basis vector of energy <= n_max.
inline CheckReport verify_e_commutators(const std::vector<int>& ns, const std::vector<int>& ms, const GaussRat& c, int energy,
                                int order)
{
    CheckReport report{"e_commutator", {{"n", ns}, {"m", ms}, {"c", c.str()}, {"energy", energy}, {"order", order}}, {}, true,
                       nullptr, nullptr};
    const int cutoff = energy + 8;
    int checked = 0;
    for (int n : ns)
        for (int m : ms) {
            const WedgeOperator an = alpha(n), em = E_operator(m, c, order + 2), emn = E_operator(m + n, c, order + 2);
            const Series vs = varsigma_series(c * GaussRat(n), order + 2);
            for (const auto& lambda : partitions_up_to(energy)) {
                const FockVector v = FockVector::basis(lambda, cutoff, order + 2);
                const FockVector lhs = an(em(v)) - em(an(v));
                const FockVector rhs = emn(v) * vs;
                compare_vectors(report, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " on " + lambda.str(), lhs,
                                rhs, order);
                ++checked;
            }
        }
    report.details = {{"cases", checked}};
    return report;
}

/// e^{auF2} alpha_{-m} e^{-auF2} = E_{-m}(aum) on basis vectors of energy <= energy.
inline CheckReport verify_e_conjugation(int m_max, const Rational& a, int energy, int order)
{
    CheckReport report{"e_conjugation", {{"m_max", m_max}, {"a", to_string(a)}, {"energy", energy}, {"order", order}}, {}, true,
                       nullptr, nullptr};
    const int cutoff = energy + m_max;
    const GaussRat ga(a);
    for (int m = 1; m <= m_max; ++m) {
        const WedgeOperator e = E_operator(-m, ga * GaussRat(m), order);
        for (const auto& lambda : partitions_up_to(energy)) {
            const FockVector v = FockVector::basis(lambda, cutoff, order);
            const FockVector lhs = exp_f2(ga, order)(alpha(-m)(exp_f2(-ga, order)(v)));
            compare_vectors(report, "m=" + std::to_string(m) + " on " + lambda.str(), lhs, e(v), order);
        }
    }
    return report;
}

/// Principal specialization s_lambda(1, e^{icu}, e^{2icu}, ...) from the character expansion.
inline Series principal_specialization(const Partition& lambda, const GaussRat& c, int order)
{
    const int inner = order + 2 * lambda.size() + 2;
    Series s(inner);
    for (const auto& mu : partitions(lambda.size())) {
        Series term = Series::constant(GaussRat(ratio(character(lambda, mu), zeta(mu))), inner);
        for (int part : mu.parts()) term = term * gamma_coefficient(c, part, inner);
        s += term;
    }
    return s;
}

/// (Gamma_+(cu) v_lambda, v_0) = s_lambda(1, e^{icu}, ...) for |lambda| <= n, and at c = i the
/// hook-product identity QDim(lambda) = e^{-(f2 + |lambda|)u/2} s_lambda(1, e^{-u}, ...).
inline CheckReport verify_schur(int n, int order)
{
    CheckReport report{"schur", {{"max_size", n}, {"order", order}}, {}, true, nullptr, nullptr};
    const int inner = order + 2 * n + 2;
    for (const GaussRat& c : {GaussRat(1), GaussRat::i(), GaussRat(make_rational(2, 3))}) {
        const WedgeOperator g = gamma_plus(c, inner);
        for (const auto& lambda : partitions_up_to(n)) {
            const Series m = vacuum_expectation(g(FockVector::basis(lambda, n, inner)));
            const Series expected = principal_specialization(lambda, c, order);
            compare_quiet(report, "c=" + c.str() + " lambda=" + lambda.str(), m, expected, -2 * n - 2, order);
            if (c == GaussRat::i()) {
                const Rational shift = -make_rational(f2(lambda) + lambda.size(), 2);
                const Series lhs = qdim_series(lambda, order).series;
                compare_quiet(report, "qdim " + lambda.str(), exp_linear(GaussRat(shift), inner) * m, lhs, -2 * n - 2,
                              order);
            }
        }
    }
    return report;
}

/// e^{-u|mu|/2} (au)^{-l} (Gamma_+(iu) e^{auF2} |mu>, v_0) = prod binom((a+1)mu_i, mu_i) gmv_rhs(mu, a).
inline CheckReport verify_gvo2(const Partition& mu, const Rational& a, int order)
{
    CheckReport report{"gmv_operator", {{"mu", mu.parts()}, {"a", to_string(a)}, {"order", order}}, {}, true, nullptr, nullptr};
    const int n = mu.size();
    const int inner = order + 2 * n + 2 * mu.length() + 4;
    const FockVector v = ket(mu, n, inner);
    const FockVector w = gamma_plus(GaussRat::i(), inner)(exp_f2(GaussRat(a), inner)(v));
    Series lhs = vacuum_expectation(w) * exp_linear(GaussRat(make_rational(-n, 2)), inner);
    lhs = (lhs / GaussRat(pow(a, mu.length()))).shifted(-mu.length());
    const Series rhs = gmv_rhs(mu, a, order) * GaussRat(gmv_prefactor(mu, a));
    compare_quiet(report, "matrix element", lhs, rhs, -kExactOrder / 2, order);
    return report;
}

/// Coefficient of E_{-m+k}(aum) on the right of the Gamma_+ conjugation.
inline Series conjugation_coefficient(int m, const Rational& a, int k, int order)
{
    Series c = Series::constant(1, order + 2);
    const Rational half = a * m / 2;
    for (int j = 1; j <= k; ++j) {
        const Series num = exp_linear(GaussRat(half), order + 2) - exp_linear(GaussRat(Rational(-half - (j - 1))), order + 2);
        const Series den = Series::constant(1, order + 2) - exp_linear(GaussRat(-j), order + 2);
        c = c * num * den.inverse();
    }
    return c;
}

/// Gamma_+(iu) E_{-m}(aum) Gamma_+(iu)^{-1} against the closed sum, on basis vectors of energy <= energy.
inline CheckReport verify_conjugation(int m, const Rational& a, int energy, int order)
{
    CheckReport report{"vertex_conjugation", {{"m", m}, {"a", to_string(a)}, {"energy", energy}, {"order", order}}, {}, true,
                       nullptr, nullptr};
    const int cutoff = energy + m;
    const int inner = order + 4 * cutoff + 4;
    const GaussRat s(Rational(a * m));
    const WedgeOperator gp = gamma_plus(GaussRat::i(), inner), gi = gamma_plus(GaussRat::i(), inner, true);
    const WedgeOperator e = E_operator(-m, s, inner);
    for (const auto& lambda : partitions_up_to(energy)) {
        const FockVector v = FockVector::basis(lambda, cutoff, inner);
        const FockVector lhs = gp(e(gi(v)));
        FockVector rhs(cutoff);
        for (int k = 0; k <= m + lambda.size(); ++k) rhs += E_operator(-m + k, s, inner)(v) * conjugation_coefficient(m, a, k, inner);
        compare_vectors(report, "on " + lambda.str(), lhs, rhs, order);
    }
    return report;
}

/// <A(z_1;a) ... A(z_n;a)> = gmv_rhs(z, a) in the scaled variable.
inline CheckReport verify_a_vacuum(const std::vector<int>& z, const Rational& a, int order)
{
    CheckReport report{"a_vacuum", {{"z", z}, {"a", to_string(a)}, {"order", order}}, {}, true, nullptr, nullptr};
    int total = 0;
    for (int x : z) total += x;
    const int inner = order + 4 * total + 4;
    FockVector v = FockVector::vacuum(total, inner);
    for (auto it = z.rbegin(); it != z.rend(); ++it) v = A_operator(*it, a, inner)(v);
    const Series lhs = vacuum_expectation(v);
    const Series rhs = gmv_rhs(Partition(z), a, order);
    compare_quiet(report, "vacuum expectation", lhs, rhs, -kExactOrder / 2, order);
    report.details = {{"leading", lhs.coefficient(rhs.valuation()).str()}};
    return report;
}

/// (Gamma_+ v, w) = (v, Gamma_- w) on random vectors of energy <= energy.
inline CheckReport verify_adjoint(int energy, int samples, unsigned seed, int order)
{
    CheckReport report{"adjoint", {{"energy", energy}, {"samples", samples}, {"seed", seed}, {"order", order}}, {}, true,
                       nullptr, nullptr};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> val(-9, 9);
    const auto& basis = partitions_up_to(energy);
    const int inner = order + 2 * energy + 2;
    auto random_vector = [&] {
        FockTerms t;
        for (const auto& p : basis) add_term(t, p, Series::constant(GaussRat(make_rational(val(rng), 4 + std::abs(val(rng)) % 3)), inner));
        return FockVector::from_terms(std::move(t), energy, true, energy);
    };
    for (const GaussRat& c : {GaussRat::i(), GaussRat(make_rational(1, 2))})
        for (int s = 0; s < samples; ++s) {
            const FockVector v = random_vector(), w = random_vector();
            const Series lhs = pair(gamma_plus(c, inner)(v), w);
            const Series rhs = pair(v, gamma_minus(c, inner, energy)(w));
            compare_quiet(report, "sample " + std::to_string(s), lhs, rhs, -kExactOrder / 2, order);
        }
    return report;
}

} // namespace hodge
