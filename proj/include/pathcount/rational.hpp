#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pathcount {

// Arbitrary-precision integers and always-reduced rationals. cpp_rational
// keeps the denominator positive and the fraction in lowest terms, which is
// exactly the canonical form the rest of the library assumes.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer pow_integer(const Integer& base, unsigned exp) {
    Integer r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

Integer factorial(unsigned n);

// "123", "-4/7", "0.25", "1e-6", "2.5e3" -> exact Rational.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Exact-value rendering: "p/q" (or "p" when q == 1).
std::string to_string_exact(const Rational& value);

// Decimal rendering with the given number of fractional digits, truncated
// toward zero, for human-readable approximation columns. Exact values stay
// available through to_string_exact.
std::string decimal_string(const Rational& value, int digits);

}  // namespace pathcount
