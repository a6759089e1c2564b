#include "pathcount/rational.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace pathcount {

namespace {

std::shared_mutex factorial_mutex;
std::vector<Integer> factorial_cache{1, 1};  // 0!, 1!

}  // namespace

Integer factorial(unsigned n) {
    {
        std::shared_lock lock(factorial_mutex);
        if (n < factorial_cache.size()) return factorial_cache[n];
    }
    std::unique_lock lock(factorial_mutex);
    while (factorial_cache.size() <= n) {
        factorial_cache.push_back(factorial_cache.back() * Integer(factorial_cache.size()));
    }
    return factorial_cache[n];
}

namespace {

// cpp_int's string constructor reads leading zeros as octal, so integer
// literals are validated and normalized here.
Integer parse_integer_decimal(const std::string& text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("empty integer literal");
    std::size_t first = pos;
    while (pos < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw std::invalid_argument("bad integer literal");
        }
        ++pos;
    }
    std::size_t nz = text.find_first_not_of('0', first);
    Integer value(nz == std::string::npos ? "0" : text.substr(nz));
    return neg ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("not a rational literal: '" + text + "'"); };
    if (text.empty()) fail();

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            Integer num = parse_integer_decimal(text.substr(0, slash));
            Integer den = parse_integer_decimal(text.substr(slash + 1));
            if (den == 0) fail();
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            fail();
        } catch (const std::runtime_error&) {
            fail();
        }
    }

    // [sign] digits [. digits] [eE [sign] digits]
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long long frac_digits = 0, exponent = 0;
    bool any = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        any = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++frac_digits;
            any = true;
        }
    }
    if (!any) fail();
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            eneg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size()) fail();
        long long e = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            e = e * 10 + (text[pos++] - '0');
            if (e > 100000) fail();
        }
        exponent = eneg ? -e : e;
    }
    if (pos != text.size()) fail();

    std::size_t nz = digits.find_first_not_of('0');
    Integer mantissa(nz == std::string::npos ? "0" : digits.substr(nz));
    if (neg) mantissa = -mantissa;
    long long net = exponent - frac_digits;
    Integer scale = pow_integer(10, static_cast<unsigned>(net < 0 ? -net : net));
    return net < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale, 1);
}

std::string to_string_exact(const Rational& value) {
    Integer num = numerator(value), den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    Integer num = numerator(value), den = denominator(value);
    bool neg = num < 0;
    if (neg) num = -num;
    Integer scaled = num * pow_integer(10, static_cast<unsigned>(digits));
    Integer q = scaled / den;
    std::string s = q.str();
    if (static_cast<long long>(s.size()) <= digits) {
        s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    }
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg && q != 0) ? "-" + s : s;
}

}  // namespace pathcount
