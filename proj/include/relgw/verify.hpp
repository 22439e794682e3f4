#pragma once

// Cross-validation driver: every identity the two built-in pairs are known
// to satisfy, run at a requested degree/order and collected into reports.

#include "relgw/closed_form.hpp"
#include "relgw/pair.hpp"
#include "relgw/series.hpp"
#include "relgw/wdvv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relgw {

struct VerifyOptions {
    long d_max = 10;
    long order = 20;
    long enumeration_d_max = 12; // brute-force composition cross-check bound
};

namespace detail {

inline VerificationReport compare_values(const std::string& identity, long at,
                                         const Rational& expected, const Rational& got)
{
    if (expected != got) {
        return VerificationReport::fail(identity, at, at, expected, got);
    }
    return VerificationReport::ok(identity, at);
}

} // namespace detail

/// Identities specific to the two built-in pairs (closed forms, functional
/// equation, ODE, M-constant).
inline std::vector<VerificationReport> verify_builtin(PairKind kind, const VerifyOptions& opt)
{
    std::vector<VerificationReport> out;
    const RankOnePair pair = kind == PairKind::line ? builtin_line() : builtin_conic();
    const long shift = kind == PairKind::line ? 1 : 2;
    InvariantTable tab(pair);
    tab.extend(std::max(opt.d_max + shift, opt.order + 1));

    // recursion vs closed form, fast path for every degree
    {
        const auto fast = closed_fast(kind, opt.d_max);
        VerificationReport r = VerificationReport::ok("recursion-vs-closed-form", opt.d_max);
        for (const auto& [deg, value] : fast) {
            if (tab.nbar(deg) != value) {
                r = VerificationReport::fail("recursion-vs-closed-form", opt.d_max, deg, value,
                                             tab.nbar(deg));
                break;
            }
        }
        out.push_back(r);
    }

    // fast path vs brute-force composition enumeration
    {
        const long cap = std::min({opt.d_max, opt.enumeration_d_max, kCompositionEnumerationCap});
        const auto fast = closed_fast(kind, cap);
        VerificationReport r = VerificationReport::ok("closed-fast-vs-enumeration", cap);
        for (long d = 1; d <= cap; ++d) {
            const Rational oracle = kind == PairKind::line ? closed_line(d) : closed_conic(d);
            if (fast.at(d + shift) != oracle) {
                r = VerificationReport::fail("closed-fast-vs-enumeration", cap, d, oracle,
                                             fast.at(d + shift));
                break;
            }
        }
        out.push_back(r);
    }

    out.push_back(check_functional_eq(kind, tab, opt.order));
    out.push_back(check_ode(kind, tab, opt.order));
    out.push_back(check_m_constant(kind, tab, opt.order));
    return out;
}

/// Identities valid for any rank-one pair: H-independence of the general
/// recursion and the fixed/unfixed relation.
inline std::vector<VerificationReport> verify_pair(const RankOnePair& pair,
                                                   const VerifyOptions& opt)
{
    std::vector<VerificationReport> out;
    InvariantTable tab(pair);
    tab.extend(opt.d_max);

    {
        VerificationReport r = VerificationReport::ok("h-independence", opt.d_max);
        for (long m = 1; m <= 3 && r.pass; ++m) {
            InvariantTable gh(pair, m);
            for (long d = 1; d <= opt.d_max; ++d) {
                if (gh.nbar(d) != tab.nbar(d)) {
                    r = VerificationReport::fail("h-independence", opt.d_max, d, tab.nbar(d),
                                                 gh.nbar(d));
                    break;
                }
            }
        }
        out.push_back(r);
    }

    {
        VerificationReport r = VerificationReport::ok("move2fix", opt.d_max);
        for (long d = 1; d <= opt.d_max; ++d) {
            if (pair.points_unfixed(d) <= 0) {
                continue;
            }
            const Rational expected = Rational(pair.intersection_d(d)) * tab.nbar(d);
            if (tab.n_unfixed(d) != expected) {
                r = VerificationReport::fail("move2fix", opt.d_max, d, expected, tab.n_unfixed(d));
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

/// Pair-independent kernel identities (Lambert series, Lagrange inversion,
/// the scalar ODE lemma).
inline std::vector<VerificationReport> verify_kernels(long order)
{
    std::vector<VerificationReport> out;

    // W e^{-W} = x
    {
        const TruncatedSeries w = lambert_w(order);
        TruncatedSeries x(order);
        x[1] = 1;
        out.push_back(
            compare_series("lambert-kernel", w * exp_series(Rational(-1) * w), x));
    }

    // Lagrange inversion of x e^{-x} reproduces the W coefficients
    {
        TruncatedSeries x(order);
        x[1] = 1;
        const TruncatedSeries phi = x * exp_series(Rational(-1) * x);
        out.push_back(
            compare_series("lagrange-inversion-of-x-exp", lagrange_invert(phi),
                           lambert_w(order)));
    }

    // f = -W(c1 x) - W(c2 x), c1 c2 = 1/4, solves the lemma ODE
    for (const Rational& c1 : {Rational(1, 2), Rational(1), Rational(3)}) {
        const TruncatedSeries res = lemma_ode_residual(c1, order);
        const long bad = res.first_nonzero();
        const std::string name = "lemma-ode-c1=" + to_string(c1);
        out.push_back(bad < 0 ? VerificationReport::ok(name, order)
                              : VerificationReport::fail(name, order, bad, Rational(0), res[bad]));
    }
    return out;
}

/// Validates an externally supplied table (e.g. loaded from a cache file)
/// against a fresh recomputation; the identity name reflects that for the
/// built-ins the recomputed values are themselves closed-form-checked.
inline VerificationReport verify_against_table(const RankOnePair& pair,
                                               const std::map<long, Rational>& entries)
{
    InvariantTable fresh(pair);
    long top = 0;
    for (const auto& [d, value] : entries) {
        top = std::max(top, d);
        if (fresh.nbar(d) != value) {
            return VerificationReport::fail("recursion-vs-closed-form", top, d, fresh.nbar(d),
                                            value);
        }
    }
    return VerificationReport::ok("recursion-vs-closed-form", top);
}

} // namespace relgw
