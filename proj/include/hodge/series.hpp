#pragma once

// Truncated Laurent series in a single variable u over Gaussian rationals.
//
// A Series knows its coefficients exactly for every exponent below order();
// exponents at or above order() are unknown and never reported. Arithmetic
// propagates the cutoff: a product is only known as far as both factors
// allow once the other factor's valuation is taken into account.

#include "hodge/gauss_rat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace hodge {

class Series {
public:
    /// The zero series known through exponent order-1.
    explicit Series(int order = 0) : val_(order), order_(order) {}

    static Series zero(int order) { return Series(order); }

    static Series constant(const GaussRat& c, int order) { return monomial(c, 0, order); }

    static Series monomial(const GaussRat& c, int exponent, int order)
    {
        Series s(order);
        if (exponent < order && !c.is_zero()) {
            s.val_ = exponent;
            s.coeffs_.assign(static_cast<std::size_t>(order - exponent), GaussRat());
            s.coeffs_[0] = c;
        }
        return s;
    }

    /// coeffs[k] is the coefficient of u^(start + k); entries at or past order are dropped.
    static Series from_coefficients(int start, std::vector<GaussRat> coeffs, int order)
    {
        Series s(order);
        if (start >= order) return s;
        coeffs.resize(static_cast<std::size_t>(order - start));
        s.val_ = start;
        s.coeffs_ = std::move(coeffs);
        s.normalize();
        return s;
    }

    int order() const { return order_; }

    /// Smallest exponent with a nonzero coefficient; order() for the zero series.
    int valuation() const { return val_; }

    bool is_zero() const { return coeffs_.empty(); }

    GaussRat coefficient(int k) const
    {
        if (k >= order_)
            throw ArgumentError("coefficient u^" + std::to_string(k) + " is beyond the truncation order " +
                                std::to_string(order_));
        if (k < val_) return GaussRat();
        return coeffs_[static_cast<std::size_t>(k - val_)];
    }

    /// All coefficients have zero imaginary part.
    bool is_real() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussRat& c) { return c.is_real(); });
    }

    /// Only exponents of the given parity carry nonzero coefficients.
    bool has_parity(int parity) const
    {
        for (int k = val_; k < order_; ++k)
            if (((k % 2) + 2) % 2 != parity && !coefficient(k).is_zero()) return false;
        return true;
    }

    Series truncated(int order) const
    {
        if (order >= order_) return *this;
        Series s(order);
        if (val_ >= order) return s;
        s.val_ = val_;
        s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (order - val_));
        s.normalize();
        return s;
    }

    /// Multiplication by u^k.
    Series shifted(int k) const
    {
        Series s = *this;
        s.val_ += k;
        s.order_ += k;
        return s;
    }

    Series operator-() const
    {
        Series s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    Series& operator+=(const Series& o) { return *this = add(*this, o, 1); }
    Series& operator-=(const Series& o) { return *this = add(*this, o, -1); }
    friend Series operator+(const Series& a, const Series& b) { return add(a, b, 1); }
    friend Series operator-(const Series& a, const Series& b) { return add(a, b, -1); }

    Series& operator*=(const GaussRat& c)
    {
        if (c.is_zero()) {
            *this = Series(order_);
            return *this;
        }
        for (auto& x : coeffs_)
            if (!x.is_zero()) x *= c;
        return *this;
    }
    friend Series operator*(Series s, const GaussRat& c) { return s *= c; }
    friend Series operator*(const GaussRat& c, Series s) { return s *= c; }
    friend Series operator/(Series s, const GaussRat& c) { return s *= GaussRat(1) / c; }

    friend Series operator*(const Series& a, const Series& b)
    {
        const int order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        Series r(order);
        if (a.is_zero() || b.is_zero()) return r;
        const int start = a.val_ + b.val_;
        if (start >= order) return r;
        std::vector<GaussRat> out(static_cast<std::size_t>(order - start));
        const int na = static_cast<int>(a.coeffs_.size());
        const int nb = static_cast<int>(b.coeffs_.size());
        for (int i = 0; i < na && i < order - start; ++i) {
            const GaussRat& x = a.coeffs_[static_cast<std::size_t>(i)];
            if (x.is_zero()) continue;
            const int lim = std::min(nb, order - start - i);
            for (int j = 0; j < lim; ++j) {
                const GaussRat& y = b.coeffs_[static_cast<std::size_t>(j)];
                if (y.is_zero()) continue;
                out[static_cast<std::size_t>(i + j)] += x * y;
            }
        }
        return from_coefficients(start, std::move(out), order);
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Multiplicative inverse; the leading coefficient must be nonzero.
    Series inverse() const
    {
        if (is_zero()) throw ArgumentError("cannot invert a series with no known nonzero coefficient");
        const int v = val_;
        const int precision = order_ - v;
        const GaussRat lead_inv = GaussRat(1) / coeffs_[0];
        std::vector<GaussRat> out(static_cast<std::size_t>(precision));
        out[0] = lead_inv;
        for (int n = 1; n < precision; ++n) {
            GaussRat s;
            for (int k = 1; k <= n; ++k) {
                const GaussRat& c = coeffs_[static_cast<std::size_t>(k)];
                if (c.is_zero()) continue;
                s += c * out[static_cast<std::size_t>(n - k)];
            }
            out[static_cast<std::size_t>(n)] = -s * lead_inv;
        }
        return from_coefficients(-v, std::move(out), -v + precision);
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    /// Natural logarithm of a series 1 + O(u).
    Series log() const
    {
        if (val_ != 0 || !(coeffs_[0] == GaussRat(1)))
            throw ArgumentError("log needs a series with constant term 1 and no poles");
        const int n = order_;
        std::vector<GaussRat> deriv(static_cast<std::size_t>(std::max(n - 1, 0)));
        for (int k = 1; k < n; ++k) deriv[static_cast<std::size_t>(k - 1)] = coefficient(k) * GaussRat(k);
        const Series ratio = from_coefficients(0, std::move(deriv), n - 1) * inverse();
        std::vector<GaussRat> out(static_cast<std::size_t>(n));
        for (int k = 1; k < n; ++k) out[static_cast<std::size_t>(k)] = ratio.coefficient(k - 1) / GaussRat(k);
        return from_coefficients(0, std::move(out), n);
    }

    /// Exponential of a series with positive valuation.
    Series exp() const
    {
        if (val_ < 1) throw ArgumentError("exp needs a series with positive valuation");
        const int n = order_;
        if (n <= 0) return Series(n);
        std::vector<GaussRat> e(static_cast<std::size_t>(n));
        e[0] = 1;
        for (int m = 1; m < n; ++m) {
            GaussRat s;
            for (int k = std::max(1, val_); k <= m; ++k) {
                const GaussRat c = coefficient(k);
                if (c.is_zero()) continue;
                s += c * GaussRat(k) * e[static_cast<std::size_t>(m - k)];
            }
            e[static_cast<std::size_t>(m)] = s / GaussRat(m);
        }
        return from_coefficients(0, std::move(e), n);
    }

    /// Substitution u -> c u.
    Series rescaled(const GaussRat& c) const
    {
        Series s = *this;
        if (c.is_zero()) {
            if (val_ < 0) throw ArgumentError("rescaling a Laurent series by zero");
            return Series::constant(val_ == 0 ? coeffs_[0] : GaussRat(), order_);
        }
        for (int k = val_; k < order_; ++k) {
            auto& x = s.coeffs_[static_cast<std::size_t>(k - val_)];
            if (!x.is_zero()) x *= c.pow(k);
        }
        return s;
    }

    /// Substitution u -> i u.
    Series conj_i() const
    {
        Series s = *this;
        for (int k = val_; k < order_; ++k) {
            auto& x = s.coeffs_[static_cast<std::size_t>(k - val_)];
            if (!x.is_zero()) x *= i_power(k);
        }
        return s;
    }

    Series pow(int e) const
    {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) return Series::constant(1, order_ - val_);
        Series r = *this;
        for (int k = 1; k < e; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.order_ == b.order_ && a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (int k = val_; k < order_; ++k) {
            const GaussRat c = coefficient(k);
            if (c.is_zero()) continue;
            os << (first ? "" : " + ") << '(' << c.str() << ")u^" << k;
            first = false;
        }
        os << (first ? "" : " + ") << "O(u^" << order_ << ')';
        return os.str();
    }

private:
    static Series add(const Series& a, const Series& b, int sign)
    {
        const int order = std::min(a.order_, b.order_);
        const int start = std::min(a.val_, b.val_);
        Series r(order);
        if (start >= order) return r;
        std::vector<GaussRat> out(static_cast<std::size_t>(order - start));
        for (int k = a.val_; k < order; ++k) out[static_cast<std::size_t>(k - start)] = a.coeffs_[static_cast<std::size_t>(k - a.val_)];
        for (int k = b.val_; k < order; ++k) {
            const GaussRat& y = b.coeffs_[static_cast<std::size_t>(k - b.val_)];
            if (y.is_zero()) continue;
            if (sign > 0) out[static_cast<std::size_t>(k - start)] += y;
            else out[static_cast<std::size_t>(k - start)] -= y;
        }
        return from_coefficients(start, std::move(out), order);
    }

    void normalize()
    {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            val_ = order_;
            return;
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }

    int val_;
    int order_;
    std::vector<GaussRat> coeffs_; // exponents val_ .. order_-1
};

inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

/// Coefficientwise equality on all exponents known to both series.
inline bool agree(const Series& a, const Series& b)
{
    const int order = std::min(a.order(), b.order());
    for (int k = std::min(a.valuation(), b.valuation()); k < order; ++k)
        if (!(a.coefficient(k) == b.coefficient(k))) return false;
    return true;
}

/// sum_k c^k u^k / k!, truncated at order.
inline Series exp_linear(const GaussRat& c, int order)
{
    if (order <= 0) return Series(order);
    std::vector<GaussRat> out(static_cast<std::size_t>(order));
    out[0] = 1;
    for (int k = 1; k < order; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * c / GaussRat(k);
    return Series::from_coefficients(0, std::move(out), order);
}

/// e^{cu/2} - e^{-cu/2}.
inline Series varsigma_series(const GaussRat& c, int order)
{
    const GaussRat half = c / GaussRat(2);
    return exp_linear(half, order) - exp_linear(-half, order);
}

/// S(cu) = sinh(cu/2)/(cu/2), equal to 1 at c = 0.
inline Series S_series(const GaussRat& c, int order)
{
    if (c.is_zero()) return Series::constant(1, order);
    return (varsigma_series(c, order + 1).shifted(-1)) / c;
}

/// Laurent series of 1/(2u sin(du/2)) through exponent order-1.
inline Series sin_kernel(int d, int order)
{
    if (d < 1) throw ArgumentError("sin_kernel needs d >= 1");
    // 2u sin(du/2) = u (e^{idu/2} - e^{-idu/2}) / i has valuation 2
    const GaussRat half(0, make_rational(d, 2));
    const Series sin2 = (exp_linear(half, order + 3) - exp_linear(-half, order + 3)) / GaussRat::i();
    const Series result = sin2.shifted(1).inverse();
    if (!result.is_real()) throw VerificationError("sin_kernel produced a non-real coefficient");
    return result;
}

// JSON form: {"valuation": v, "order": o, "coefficients": [[exp, "re", "im"], ...]}.
inline nlohmann::json to_json(const Series& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = s.valuation(); k < s.order(); ++k) {
        const GaussRat c = s.coefficient(k);
        if (c.is_zero()) continue;
        coeffs.push_back({k, to_string(c.re()), to_string(c.im())});
    }
    return {{"valuation", s.valuation()}, {"order", s.order()}, {"coefficients", coeffs}};
}

inline Series series_from_json(const nlohmann::json& j)
{
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coefficients");
    if (coeffs.empty()) return Series(order);
    const int start = coeffs.front().at(0).get<int>();
    std::vector<GaussRat> dense;
    for (const auto& entry : coeffs) {
        const int k = entry.at(0).get<int>();
        if (k < start || k >= order) throw ArgumentError("series JSON exponent out of range");
        dense.resize(static_cast<std::size_t>(std::max<int>(static_cast<int>(dense.size()), k - start + 1)));
        dense[static_cast<std::size_t>(k - start)] =
            GaussRat(parse_rational(entry.at(1).get<std::string>()), parse_rational(entry.at(2).get<std::string>()));
    }
    Series s = Series::from_coefficients(start, std::move(dense), order);
    if (j.contains("valuation") && j.at("valuation").get<int>() != s.valuation())
        throw ArgumentError("series JSON valuation does not match its coefficients");
    return s;
}

} // namespace hodge
