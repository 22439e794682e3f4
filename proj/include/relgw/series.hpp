#pragma once

// Truncated formal power series over Rational. A series of order N stores
// coefficients of q^0..q^N; coefficients past N are unknown, not zero, so
// binary operations truncate to the smaller order.

#include "relgw/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relgw {

class TruncatedSeries {
public:
    explicit TruncatedSeries(long order) : coeff_(static_cast<std::size_t>(order) + 1)
    {
        if (order < 0) {
            throw std::invalid_argument("TruncatedSeries: order must be >= 0");
        }
    }

    TruncatedSeries(long order, std::vector<Rational> coeff) : coeff_(std::move(coeff))
    {
        if (order < 0 || coeff_.size() != static_cast<std::size_t>(order) + 1) {
            throw std::invalid_argument("TruncatedSeries: coefficient count must be order+1");
        }
    }

    static TruncatedSeries constant(const Rational& c, long order)
    {
        TruncatedSeries s(order);
        s.coeff_[0] = c;
        return s;
    }

    /// the monomial q (requires order >= 1)
    static TruncatedSeries variable(long order)
    {
        TruncatedSeries s(order);
        s.coeff_.at(1) = 1;
        return s;
    }

    long order() const { return static_cast<long>(coeff_.size()) - 1; }

    const Rational& operator[](long n) const { return coeff_.at(static_cast<std::size_t>(n)); }
    Rational& operator[](long n) { return coeff_.at(static_cast<std::size_t>(n)); }

    bool is_zero() const
    {
        return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == 0; });
    }

    /// index of the first nonzero coefficient, or -1 if none
    long first_nonzero() const
    {
        for (long n = 0; n <= order(); ++n) {
            if (coeff_[static_cast<std::size_t>(n)] != 0) {
                return n;
            }
        }
        return -1;
    }

    TruncatedSeries truncated(long new_order) const
    {
        if (new_order > order()) {
            throw std::invalid_argument("truncated: cannot extend a series");
        }
        return TruncatedSeries(new_order,
                               {coeff_.begin(), coeff_.begin() + new_order + 1});
    }

    /// multiply by q^k; the result is valid to order+k
    TruncatedSeries shifted(long k) const
    {
        if (k < 0) {
            throw std::invalid_argument("shifted: negative shift");
        }
        TruncatedSeries r(order() + k);
        for (long n = 0; n <= order(); ++n) {
            r[n + k] = coeff_[static_cast<std::size_t>(n)];
        }
        return r;
    }

    std::string str() const
    {
        std::ostringstream out;
        bool any = false;
        for (long n = 0; n <= order(); ++n) {
            const Rational& c = coeff_[static_cast<std::size_t>(n)];
            if (c == 0) {
                continue;
            }
            if (any) {
                out << " + ";
            }
            out << to_string(c);
            if (n == 1) {
                out << "*q";
            } else if (n > 1) {
                out << "*q^" << n;
            }
            any = true;
        }
        if (!any) {
            out << "0";
        }
        out << " (+ O(q^" << order() + 1 << "))";
        return out.str();
    }

private:
    std::vector<Rational> coeff_;
};

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const long n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (long i = 0; i <= n; ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const long n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (long i = 0; i <= n; ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

/// Cauchy product, truncated to min(order_a, order_b).
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const long n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; i + j <= n && j <= b.order(); ++j) {
            if (i <= a.order() && a[i] != 0 && b[j] != 0) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a)
{
    TruncatedSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) {
        r[i] = c * a[i];
    }
    return r;
}

inline bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order()) {
        return false;
    }
    for (long i = 0; i <= a.order(); ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

/// q d/dq: multiplies the coefficient of q^n by n.
inline TruncatedSeries q_d_dq(const TruncatedSeries& a)
{
    TruncatedSeries r(a.order());
    for (long n = 0; n <= a.order(); ++n) {
        r[n] = Rational(n) * a[n];
    }
    return r;
}

/// exp of a series with zero constant term, via E' = a' E.
inline TruncatedSeries exp_series(const TruncatedSeries& a)
{
    if (a[0] != 0) {
        throw std::invalid_argument("exp_series: nonzero constant term");
    }
    const long N = a.order();
    TruncatedSeries e(N);
    e[0] = 1;
    for (long n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (long k = 1; k <= n; ++k) {
            if (a[k] != 0) {
                acc += Rational(k) * a[k] * e[n - k];
            }
        }
        e[n] = acc / n;
    }
    return e;
}

/// log of a series with constant term 1, via L' = a'/a.
inline TruncatedSeries log_series(const TruncatedSeries& a)
{
    if (a[0] != 1) {
        throw std::invalid_argument("log_series: constant term must be 1");
    }
    const long N = a.order();
    TruncatedSeries l(N);
    for (long n = 1; n <= N; ++n) {
        Rational acc = Rational(n) * a[n];
        for (long k = 1; k < n; ++k) {
            acc -= Rational(k) * l[k] * a[n - k];
        }
        l[n] = acc / n;
    }
    return l;
}

/// 1/a for a with nonzero constant term.
inline TruncatedSeries reciprocal(const TruncatedSeries& a)
{
    if (a[0] == 0) {
        throw std::invalid_argument("reciprocal: zero constant term");
    }
    const long N = a.order();
    TruncatedSeries r(N);
    r[0] = 1 / a[0];
    for (long n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (long k = 1; k <= n; ++k) {
            if (a[k] != 0) {
                acc += a[k] * r[n - k];
            }
        }
        r[n] = -acc / a[0];
    }
    return r;
}

/// outer(inner) for inner with zero constant term; Horner evaluation.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner)
{
    if (inner[0] != 0) {
        throw std::invalid_argument("compose: inner series must have zero constant term");
    }
    const long N = std::min(outer.order(), inner.order());
    const TruncatedSeries x = inner.order() == N ? inner : inner.truncated(N);
    TruncatedSeries r = TruncatedSeries::constant(outer[outer.order()], N);
    for (long n = outer.order() - 1; n >= 0; --n) {
        r = r * x;
        r[0] += outer[n];
    }
    return r;
}

/// A = (d/dq - 1/q) F for F with zero constant term: coefficient-wise
/// f_n q^n -> (n-1) f_n q^{n-1}. Result order is one lower.
inline TruncatedSeries a_from_f(const TruncatedSeries& f)
{
    if (f[0] != 0) {
        throw std::invalid_argument("a_from_f: nonzero constant term");
    }
    if (f.order() < 1) {
        throw std::invalid_argument("a_from_f: order must be >= 1");
    }
    TruncatedSeries r(f.order() - 1);
    for (long n = 1; n <= f.order(); ++n) {
        r[n - 1] = Rational(n - 1) * f[n];
    }
    return r;
}

/// B = (q d/dq) F / 4.
inline TruncatedSeries b_from_f(const TruncatedSeries& f)
{
    return Rational(1, 4) * q_d_dq(f);
}

/// W(x) = sum_{k>=1} k^{k-1}/k! x^k, the tree-function branch satisfying
/// W e^{-W} = x.
inline TruncatedSeries lambert_w(long order)
{
    if (order < 1) {
        throw std::invalid_argument("lambert_w: order must be >= 1");
    }
    TruncatedSeries w(order);
    for (long k = 1; k <= order; ++k) {
        using boost::multiprecision::pow;
        w[k] = Rational(pow(Integer(k), static_cast<unsigned>(k - 1)), factorial(k));
    }
    return w;
}

/// W(i*s*x) + W(-i*s*x) as a rational series: odd terms cancel and
/// i^(2m) = (-1)^m, leaving sum_{k even} 2 k^{k-1}/k! (-1)^{k/2} (s x)^k.
inline TruncatedSeries w_even_combo(long order, const Rational& scale)
{
    if (order < 1) {
        throw std::invalid_argument("w_even_combo: order must be >= 1");
    }
    TruncatedSeries s(order);
    for (long k = 2; k <= order; k += 2) {
        using boost::multiprecision::pow;
        const Rational term(2 * pow(Integer(k), static_cast<unsigned>(k - 1)), factorial(k));
        const int sign = (k / 2) % 2 == 0 ? 1 : -1;
        s[k] = Rational(sign) * term * pow_rational(scale, k);
    }
    return s;
}

/// Compositional inverse g of phi (phi(0) = 0, phi'(0) != 0), so that
/// g(phi(x)) = x to the truncation order. Lagrange inversion:
///   g_n = (1/n) [x^{n-1}] (x/phi)^n.
inline TruncatedSeries lagrange_invert(const TruncatedSeries& phi)
{
    if (phi[0] != 0) {
        throw std::invalid_argument("lagrange_invert: constant coefficient must be zero");
    }
    if (phi.order() < 1 || phi[1] == 0) {
        throw std::invalid_argument("lagrange_invert: linear coefficient must be nonzero");
    }
    const long N = phi.order();
    // phi = x*u with u(0) != 0; (x/phi)^n = u^{-n}
    TruncatedSeries u(N - 1 >= 0 ? N - 1 : 0);
    for (long n = 1; n <= N; ++n) {
        u[n - 1] = phi[n];
    }
    const TruncatedSeries r = reciprocal(u);
    TruncatedSeries g(N);
    TruncatedSeries r_pow = TruncatedSeries::constant(1, r.order());
    for (long n = 1; n <= N; ++n) {
        r_pow = r_pow * r;
        if (n - 1 <= r_pow.order()) {
            g[n] = r_pow[n - 1] / n;
        }
    }
    return g;
}

/// Residual of the shared generating-function ODE:
///   (qd/dq - 1)(qd/dq - 2) F - (qd/dq)^2 F / 4 * (qd/dq - 1) F.
inline TruncatedSeries ode_residual(const TruncatedSeries& f)
{
    const TruncatedSeries t1 = q_d_dq(f);
    const TruncatedSeries lhs = q_d_dq(t1 - f) - Rational(2) * (t1 - f); // (t-1)(t-2)f
    const TruncatedSeries rhs = (Rational(1, 4) * q_d_dq(t1)) * (t1 - f);
    return lhs - rhs;
}

/// Residual, in denominator-cleared form, of
///   x f' = (f + x^2/2 e^{-f}) / (1 + f + x^2/4 e^{-f})
/// for f = -W(c1 x) - W(c2 x) with c2 = 1/(4 c1).
inline TruncatedSeries lemma_ode_residual_for(const TruncatedSeries& f)
{
    const long N = f.order();
    const TruncatedSeries exp_neg_f = exp_series(Rational(-1) * f);
    // x^2 e^{-f}, valid to N after the shift
    const TruncatedSeries x2ef = exp_neg_f.shifted(2).truncated(N);
    const TruncatedSeries xfp = q_d_dq(f);
    const TruncatedSeries denom =
        TruncatedSeries::constant(1, N) + f + Rational(1, 4) * x2ef;
    const TruncatedSeries numer = f + Rational(1, 2) * x2ef;
    return xfp * denom - numer;
}

inline TruncatedSeries lemma_ode_residual(const Rational& c1, long order)
{
    if (c1 == 0) {
        throw std::invalid_argument("lemma_ode_residual: c1 must be nonzero");
    }
    const Rational c2 = Rational(1, 4) / c1;
    const TruncatedSeries w = lambert_w(order);
    TruncatedSeries f(order);
    for (long k = 1; k <= order; ++k) {
        f[k] = Rational(-1) * w[k] * (pow_rational(c1, k) + pow_rational(c2, k));
    }
    return lemma_ode_residual_for(f);
}

} // namespace relgw
