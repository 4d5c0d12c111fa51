#pragma once

// Exact rational scalars backed by GMP, plus the handful of integer
// helpers (factorials, binomials, powers) every other header needs.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for violated preconditions (bad partitions, poles, budgets).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exact identity check fails or an internal invariant breaks.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical num/den for arbitrary-precision integers.
inline Rational ratio(const Integer& num, const Integer& den)
{
    if (den == 0) throw ArgumentError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw ArgumentError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q" or "p" for integers; the inverse of parse_rational.
inline std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw ArgumentError("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw ArgumentError("malformed rational literal: " + s);
    if (r.get_den() == 0) throw ArgumentError("zero denominator in: " + s);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n)
{
    if (n < 0) throw ArgumentError("factorial of negative number");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// Integer binomial; zero outside 0 <= k <= n.
inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
inline Rational binomial(const Rational& x, long k)
{
    if (k < 0) return 0;
    Rational r = 1;
    for (long j = 1; j <= k; ++j) r *= (x - (j - 1)) / Rational(j);
    return r;
}

inline Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0) throw ArgumentError("zero to a negative power");
        return pow(Rational(1) / x, -e);
    }
    Rational r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer ipow(long base, long e)
{
    if (e < 0) throw ArgumentError("negative integer exponent");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(e));
    if (base < 0 && (e & 1)) r = -r;
    return r;
}

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace hodge
