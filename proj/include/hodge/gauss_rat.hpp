#pragma once

#include "hodge/rational.hpp"

#include <ostream>
#include <string>

namespace hodge {

/// Exact Gaussian rational re + im*i.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(Rational re) : re_(std::move(re)) {} // NOLINT(implicit)
    GaussRat(long re) : re_(re) {}                // NOLINT(implicit)
    GaussRat(int re) : re_(re) {}                 // NOLINT(implicit)
    template <class T, class U>
    GaussRat(const __gmp_expr<T, U>& expr) : re_(expr) {} // NOLINT(implicit): unevaluated GMP expressions
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o)
    {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o)
    {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o)
    {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o)
    {
        if (o.is_zero()) throw ArgumentError("division by zero Gaussian rational");
        if (o.is_real()) {
            re_ /= o.re_;
            if (sgn(im_) != 0) im_ /= o.re_;
            return *this;
        }
        const Rational n = o.norm();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Integer power (negative exponents invert).
    GaussRat pow(long e) const
    {
        if (e < 0) return (GaussRat(1) / *this).pow(-e);
        GaussRat r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const
    {
        if (is_real()) return to_string(re_);
        std::string s = sgn(re_) != 0 ? to_string(re_) : "";
        if (sgn(im_) > 0 && !s.empty()) s += "+";
        return s + to_string(im_) + "i";
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

private:
    Rational re_{0};
    Rational im_{0};
};

/// i^k for any integer k.
inline GaussRat i_power(long k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat(0, 1);
    case 2: return GaussRat(-1);
    default: return GaussRat(0, -1);
    }
}

} // namespace hodge
