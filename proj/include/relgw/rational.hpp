#pragma once

// Exact scalar arithmetic used throughout the library. Every invariant,
// series coefficient and binomial is a Rational; nothing is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relgw {

using Integer = boost::multiprecision::cpp_int;

// Canonical form (lowest terms, positive denominator) is maintained by the
// backend on every operation.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses the "p/q" / "p" format produced by to_string.
inline Rational parse_rational(std::string_view s)
{
    if (s.empty()) {
        throw std::invalid_argument("parse_rational: empty string");
    }
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s)));
        }
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den <= 0) {
            throw std::invalid_argument("parse_rational: denominator must be positive in \"" +
                                        std::string(s) + "\"");
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("parse_rational: cannot parse \"" + std::string(s) + "\"");
    }
}

/// n! for n >= 0. Negative input is a contract violation.
inline Integer factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial: negative argument " + std::to_string(n));
    }
    // Small memo; the WDVV recursion and the closed forms hit the same
    // factorials over and over.
    static thread_local std::vector<Integer> cache{1};
    while (static_cast<long>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    }
    return cache[static_cast<std::size_t>(n)];
}

/// Binomial coefficient with the out-of-range convention used by the
/// recursion: C(a,b) = 0 whenever b < 0, b > a or a < 0.
inline Integer binomial(long a, long b)
{
    if (b < 0 || a < 0 || b > a) {
        return 0;
    }
    if (b > a - b) {
        b = a - b;
    }
    // Multiplicative form, exact at every step (the running product is
    // always an integer).
    Integer result = 1;
    for (long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;
    }
    return result;
}

/// Exact integer power of a rational, k >= 0.
inline Rational pow_rational(const Rational& base, long k)
{
    if (k < 0) {
        throw std::domain_error("pow_rational: negative exponent");
    }
    using boost::multiprecision::pow;
    return Rational(pow(numerator(base), static_cast<unsigned>(k)),
                    pow(denominator(base), static_cast<unsigned>(k)));
}

} // namespace relgw
