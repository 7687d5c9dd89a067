#pragma once

// Unbounded integers and exact rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dorient {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt{1} << k; }

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline Rational make_rational(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }

inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Always "num/den", with den > 0 and the fraction in lowest terms.
inline std::string to_fraction_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Rounded decimal rendering for display only.
inline std::string to_decimal_string(const Rational& r, int digits = 6)
{
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator(r), den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale, frac = scaled % scale;
    std::string f = frac.str();
    while (static_cast<int>(f.size()) < digits) f = "0" + f;
    return (negative ? "-" : "") + whole.str() + (digits > 0 ? "." + f : "");
}

/// Parses "a/b" or an integer.
inline Rational parse_fraction(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

}  // namespace dorient
