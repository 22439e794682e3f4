#pragma once

// Closed-form evaluation of the line/conic invariants and the
// functional-equation checks, independent of the recursion in wdvv.hpp.
//
// Two routes are provided for the composition sums:
//   * closed_line / closed_conic: literal enumeration of ordered
//     compositions of d (Theta(2^{d-1}), capped);
//   * closed_fast: the same sums read off as a coefficient of exp(t*G(x))
//     for a fixed series G, O(d^2) per degree.

#include "relgw/rational.hpp"
#include "relgw/series.hpp"
#include "relgw/wdvv.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace relgw {

enum class PairKind { line, conic };

inline std::string to_string(PairKind k) { return k == PairKind::line ? "line" : "conic"; }

namespace detail {

/// Enumerates ordered compositions (a_1,...,a_s) of d, a_i > 0, calling
/// visit(product, s) with product = prod term(a_i) for each one.
inline void for_each_composition(long d, const std::function<Rational(long)>& term,
                                 const std::function<void(const Rational&, long)>& visit)
{
    std::function<void(long, const Rational&, long)> rec =
        [&](long remaining, const Rational& prod, long parts) {
            if (remaining == 0) {
                visit(prod, parts);
                return;
            }
            for (long a = 1; a <= remaining; ++a) {
                rec(remaining - a, prod * term(a), parts + 1);
            }
        };
    rec(d, Rational(1), 0);
}

inline Rational line_term(long a)
{
    using boost::multiprecision::pow;
    return Rational(pow(Integer(a), static_cast<unsigned>(2 * a - 1)), factorial(2 * a));
}

inline Rational conic_term(long a)
{
    using boost::multiprecision::pow;
    return Rational(pow(Integer(a), static_cast<unsigned>(a - 1)), factorial(a));
}

} // namespace detail

// Brute-force enumeration gets expensive quickly; above this only
// closed_fast is offered.
inline constexpr long kCompositionEnumerationCap = 20;

/// nbar_{d+1} for (P^2, line):
///   (2d)!/(2d+1) * sum_{s, a_1+...+a_s=d} (-1)^{d-s} (2d+1)^s / s!
///                  * prod a_i^{2a_i-1}/(2a_i)!.
inline Rational closed_line(long d)
{
    if (d < 1) {
        throw std::invalid_argument("closed_line: d must be >= 1");
    }
    if (d > kCompositionEnumerationCap) {
        throw std::invalid_argument("closed_line: d exceeds the enumeration cap; use closed_fast");
    }
    Rational sum = 0;
    detail::for_each_composition(d, detail::line_term, [&](const Rational& prod, long s) {
        const int sign = (d - s) % 2 == 0 ? 1 : -1;
        sum += Rational(sign) * pow_rational(Rational(2 * d + 1), s) / factorial(s) * prod;
    });
    return Rational(factorial(2 * d), 2 * d + 1) * sum;
}

/// nbar_{d+2} for (P^2, conic):
///   d!/(d+1) * sum_{s, a_1+...+a_s=d} (-1)^{d-s} 2^{d+s} (d+1)^s / s!
///              * prod a_i^{a_i-1}/a_i!.
inline Rational closed_conic(long d)
{
    if (d < 1) {
        throw std::invalid_argument("closed_conic: d must be >= 1");
    }
    if (d > kCompositionEnumerationCap) {
        throw std::invalid_argument("closed_conic: d exceeds the enumeration cap; use closed_fast");
    }
    using boost::multiprecision::pow;
    Rational sum = 0;
    detail::for_each_composition(d, detail::conic_term, [&](const Rational& prod, long s) {
        const int sign = (d - s) % 2 == 0 ? 1 : -1;
        sum += Rational(sign) * Rational(pow(Integer(2), static_cast<unsigned>(d + s))) *
               pow_rational(Rational(d + 1), s) / factorial(s) * prod;
    });
    return Rational(factorial(d), d + 1) * sum;
}

/// Same values as closed_line / closed_conic, but the inner composition sum
/// is collapsed: with G(x) = sum_a term(a) x^a,
///   sum_{s} (-t)^s/s! sum_{comps into s parts} prod term(a_i)
///     = [x^d] exp(-t G(x)),
/// so each degree costs one truncated exp. Keys of the returned map are the
/// invariant degrees (d+1 for the line, d+2 for the conic).
inline std::map<long, Rational> closed_fast(PairKind kind, long d_max)
{
    if (d_max < 1) {
        throw std::invalid_argument("closed_fast: d_max must be >= 1");
    }
    TruncatedSeries g(d_max);
    for (long a = 1; a <= d_max; ++a) {
        g[a] = kind == PairKind::line ? detail::line_term(a) : detail::conic_term(a);
    }
    using boost::multiprecision::pow;
    std::map<long, Rational> out;
    for (long d = 1; d <= d_max; ++d) {
        const long t = kind == PairKind::line ? 2 * d + 1 : 2 * (d + 1);
        const TruncatedSeries e = exp_series(Rational(-t) * g.truncated(d));
        const int sign = d % 2 == 0 ? 1 : -1;
        if (kind == PairKind::line) {
            out[d + 1] = Rational(sign) * Rational(factorial(2 * d), 2 * d + 1) * e[d];
        } else {
            out[d + 2] = Rational(sign) * Rational(factorial(d), d + 1) *
                         Rational(pow(Integer(2), static_cast<unsigned>(d))) * e[d];
        }
    }
    return out;
}

struct Discrepancy {
    long index = 0;
    Rational expected;
    Rational got;
};

struct VerificationReport {
    std::string identity;
    long order_or_degree = 0;
    bool pass = true;
    std::optional<Discrepancy> first_discrepancy;

    static VerificationReport ok(std::string identity, long order)
    {
        return {std::move(identity), order, true, std::nullopt};
    }

    static VerificationReport fail(std::string identity, long order, long index,
                                   Rational expected, Rational got)
    {
        return {std::move(identity), order, false,
                Discrepancy{index, std::move(expected), std::move(got)}};
    }
};

/// Compares two series coefficient-by-coefficient up to their common order.
inline VerificationReport compare_series(const std::string& identity,
                                         const TruncatedSeries& got,
                                         const TruncatedSeries& expected)
{
    const long n = std::min(got.order(), expected.order());
    for (long i = 0; i <= n; ++i) {
        if (got[i] != expected[i]) {
            return VerificationReport::fail(identity, n, i, expected[i], got[i]);
        }
    }
    return VerificationReport::ok(identity, n);
}

/// Generating series: F^L = sum nbar_d q^{2d}/(2d-1)!,
/// F^C = sum 16 nbar_d q^d/(d-1)!. Requires the table to reach every degree
/// contributing up to the order.
inline TruncatedSeries generating_series(PairKind kind, InvariantTable& table, long order)
{
    TruncatedSeries f(order);
    if (kind == PairKind::line) {
        for (long d = 1; 2 * d <= order; ++d) {
            f[2 * d] = table.nbar(d) / factorial(2 * d - 1);
        }
    } else {
        for (long d = 1; d <= order; ++d) {
            f[d] = Rational(16) * table.nbar(d) / factorial(d - 1);
        }
    }
    return f;
}

/// Checks the functional equation of the main closed-form theorem:
///   line:  A exp(W(A/2i) + W(-A/2i)) = q
///   conic: A exp(2 W(-A/8))          = 16 q
/// where A = (d/dq - 1/q) F, to the given order.
inline VerificationReport check_functional_eq_series(PairKind kind, const TruncatedSeries& f)
{
    const TruncatedSeries a = a_from_f(f);
    const long n = a.order();
    TruncatedSeries inner(n);
    if (kind == PairKind::line) {
        inner = w_even_combo(n, Rational(1, 2));
    } else {
        const TruncatedSeries w = lambert_w(n);
        for (long k = 1; k <= n; ++k) {
            inner[k] = Rational(2) * w[k] * pow_rational(Rational(-1, 8), k);
        }
    }
    const TruncatedSeries lhs = a * exp_series(compose(inner, a));
    TruncatedSeries expected(n);
    expected[1] = kind == PairKind::line ? 1 : 16;
    return compare_series("functional-equation-" + to_string(kind), lhs, expected);
}

inline VerificationReport check_functional_eq(PairKind kind, InvariantTable& table, long order)
{
    if (order < 3) {
        throw std::invalid_argument("check_functional_eq: order must be >= 3");
    }
    return check_functional_eq_series(kind, generating_series(kind, table, order));
}

inline VerificationReport check_functional_eq(PairKind kind, long order)
{
    InvariantTable t(kind == PairKind::line ? builtin_line() : builtin_conic());
    return check_functional_eq(kind, t, order);
}

/// Checks A = M q exp(B) with M^L = 1, M^C = 16.
inline VerificationReport check_m_constant(PairKind kind, InvariantTable& table, long order)
{
    const TruncatedSeries f = generating_series(kind, table, order);
    const TruncatedSeries a = a_from_f(f);
    const Rational m = kind == PairKind::line ? 1 : 16;
    const TruncatedSeries rhs = m * exp_series(b_from_f(f)).shifted(1).truncated(a.order());
    return compare_series("m-constant-" + to_string(kind), a, rhs);
}

/// Checks that the generating series annihilates the shared ODE.
inline VerificationReport check_ode(PairKind kind, InvariantTable& table, long order)
{
    const TruncatedSeries res = ode_residual(generating_series(kind, table, order));
    const long bad = res.first_nonzero();
    if (bad >= 0) {
        return VerificationReport::fail("ode-residual-" + to_string(kind), order, bad,
                                        Rational(0), res[bad]);
    }
    return VerificationReport::ok("ode-residual-" + to_string(kind), order);
}

} // namespace relgw
