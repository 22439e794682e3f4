#pragma once

// The degree-splitting recursion for maximal-tangency invariants of a
// rank-one pair, in two forms:
//
//   * the simplified H = D form,
//       sigma * nbar_d = sum_{d1+d2=d} [ (D.b1)(D.b2)^2 C(n-3, n1-2)
//                                        - (D.b1)^3 C(n-3, n1) ] nbar_{d1} nbar_{d2}
//   * the general-H four-binomial form, kept term-for-term so the two
//     routes can be compared exactly.
//
// Here n = -kappa*d and n1 = -kappa*d1 are the point counts; binomials use
// the out-of-range-is-zero convention from rational.hpp.

#include "relgw/pair.hpp"
#include "relgw/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace relgw {

/// Memoized table of nbar values for one pair. Construction is the only
/// mutation; after extend()/nbar() calls settle, the table is safe to share.
class InvariantTable {
public:
    explicit InvariantTable(RankOnePair pair, long h_multiple = 0)
        : pair_(std::move(pair)), h_multiple_(h_multiple)
    {
        pair_.validate();
        if (h_multiple_ < 0) {
            throw std::invalid_argument("InvariantTable: h_multiple must be positive");
        }
        values_ = pair_.seeds;
    }

    const RankOnePair& pair() const { return pair_; }

    /// nbar_d; computes and memoizes on demand. h_multiple = 0 selects the
    /// H = D form, otherwise the general-H recursion with H scaled by the
    /// multiple.
    const Rational& nbar(long d)
    {
        if (d < 1) {
            throw std::invalid_argument("nbar: degree must be >= 1");
        }
        const auto it = values_.find(d);
        if (it != values_.end()) {
            return it->second;
        }
        // Seeds short-circuit above; anything else needs the recursion
        // hypothesis n >= 3.
        const long n = pair_.points_unfixed(d);
        if (n < 3) {
            throw std::domain_error("nbar: missing initial condition for degree " +
                                    std::to_string(d) + " of pair \"" + pair_.name +
                                    "\" (point count " + std::to_string(n) + " < 3)");
        }
        for (long lower = 1; lower < d; ++lower) {
            nbar(lower);
        }
        const Rational value =
            h_multiple_ == 0 ? eval_simplified(d) : eval_general_h(d);
        return values_.emplace(d, value).first->second;
    }

    /// N_d = (D.beta) nbar_d, valid when -kappa*d > 0.
    Rational n_unfixed(long d)
    {
        if (pair_.points_unfixed(d) <= 0) {
            throw std::domain_error("n_unfixed: requires -K_log.beta > 0 (degree " +
                                    std::to_string(d) + ")");
        }
        return Rational(pair_.intersection_d(d)) * nbar(d);
    }

    void extend(long d_max)
    {
        for (long d = 1; d <= d_max; ++d) {
            nbar(d);
        }
    }

    const std::map<long, Rational>& values() const { return values_; }

private:
    Rational eval_simplified(long d)
    {
        const long n = pair_.points_unfixed(d);
        Rational sum = 0;
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            const long n1 = pair_.points_unfixed(d1);
            const Integer db1 = pair_.intersection_d(d1);
            const Integer db2 = pair_.intersection_d(d2);
            const Integer coeff =
                db1 * db2 * db2 * binomial(n - 3, n1 - 2) - db1 * db1 * db1 * binomial(n - 3, n1);
            if (coeff != 0) {
                sum += Rational(coeff) * values_.at(d1) * values_.at(d2);
            }
        }
        return sum / pair_.sigma;
    }

    // General-H recursion as printed, with N/d normalization, then divided
    // through by the move2fix factors: both sides collapse to nbar.
    Rational eval_general_h(long d)
    {
        const long n = pair_.points_unfixed(d);
        const long m = h_multiple_;
        Rational sum = 0;
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            const long n1 = pair_.points_unfixed(d1);
            const Integer db1 = pair_.intersection_d(d1);
            const Integer db2 = pair_.intersection_d(d2);
            const Integer hb1 = Integer(pair_.eta) * m * d1;
            const Integer hb2 = Integer(pair_.eta) * m * d2;
            const Integer coeff = db1 * db1 * hb2 * binomial(n - 3, n1 - 1) +
                                  db1 * db2 * hb2 * binomial(n - 3, n1 - 2) -
                                  db1 * db1 * hb1 * binomial(n - 3, n1) -
                                  db1 * db2 * hb1 * binomial(n - 3, n1 - 1);
            if (coeff != 0) {
                sum += Rational(coeff) * values_.at(d1) * values_.at(d2);
            }
        }
        return sum / (Integer(pair_.hd) * m);
    }

    RankOnePair pair_;
    long h_multiple_;
    std::map<long, Rational> values_;
};

inline Rational nbar(const RankOnePair& pair, long d)
{
    InvariantTable t(pair);
    return t.nbar(d);
}

inline Rational nbar_general_h(const RankOnePair& pair, long d, long h_multiple)
{
    if (h_multiple < 1) {
        throw std::invalid_argument("nbar_general_h: h_multiple must be >= 1");
    }
    InvariantTable t(pair, h_multiple);
    return t.nbar(d);
}

inline Rational n_unfixed(const RankOnePair& pair, long d)
{
    InvariantTable t(pair);
    return t.n_unfixed(d);
}

inline InvariantTable table(const RankOnePair& pair, long d_max)
{
    if (d_max < 1) {
        throw std::invalid_argument("table: d_max must be >= 1");
    }
    InvariantTable t(pair);
    t.extend(d_max);
    return t;
}

} // namespace relgw
