#pragma once

// Intersection data of a rank-one surface pair (X, D): every effective curve
// class is d * (generator), so the whole intersection theory collapses to a
// handful of integers plus the low-degree invariants that the recursion
// cannot reach.

#include "relgw/rational.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace relgw {

struct RankOnePair {
    std::string name;
    // D.beta = delta*d, K_log.beta = kappa*d, D.D = sigma,
    // H.beta = eta*d and H.D = hd for the auxiliary divisor H.
    long delta = 0;
    long kappa = 0;
    long sigma = 0;
    long eta = 0;
    long hd = 0;
    // degree -> nbar value, for every degree d >= 1 with -kappa*d < 3
    std::map<long, Rational> seeds;

    long intersection_d(long d) const { return delta * d; }

    /// number of point conditions for the unspecified-point invariant
    long points_unfixed(long d) const { return -kappa * d; }

    /// number of point conditions for the fixed-point invariant
    long points_fixed(long d) const { return -kappa * d - 1; }

    bool is_seed_degree(long d) const { return d >= 1 && -kappa * d < 3; }

    void validate() const
    {
        if (name.empty()) {
            throw std::invalid_argument("pair: missing name");
        }
        if (delta <= 0) {
            throw std::invalid_argument("pair \"" + name +
                                        "\": divisor not ample on generator (delta must be >= 1)");
        }
        if (sigma <= 0) {
            throw std::invalid_argument("pair \"" + name + "\": sigma must be >= 1");
        }
        if (eta <= 0 || hd <= 0) {
            throw std::invalid_argument("pair \"" + name + "\": eta and hd must be >= 1");
        }
        if (-kappa <= 0) {
            throw std::invalid_argument("pair \"" + name +
                                        "\": -kappa must be positive (kappa=" +
                                        std::to_string(kappa) + ")");
        }
        // Seeds must cover exactly the degrees the recursion cannot produce.
        for (long d = 1; is_seed_degree(d); ++d) {
            if (!seeds.count(d)) {
                throw std::domain_error("pair \"" + name + "\": missing seed for degree " +
                                        std::to_string(d));
            }
        }
        for (const auto& [d, v] : seeds) {
            if (!is_seed_degree(d)) {
                throw std::invalid_argument("pair \"" + name + "\": seed at degree " +
                                            std::to_string(d) +
                                            " is outside the initial-condition range");
            }
        }
    }
};

/// (P^2, line): D = H, K_log = -2H.
inline RankOnePair builtin_line()
{
    RankOnePair p;
    p.name = "line";
    p.delta = 1;
    p.kappa = -2;
    p.sigma = 1;
    p.eta = 1;
    p.hd = 1;
    p.seeds = {{1, Rational(1)}};
    return p;
}

/// (P^2, conic): D = 2H, K_log = -H.
///
/// Only nbar_2 = 1 is tabulated externally; nbar_1 = 1 is forced by
/// consistency of the degree-3 recursion with the closed form (see the
/// conic consistency test).
inline RankOnePair builtin_conic()
{
    RankOnePair p;
    p.name = "conic";
    p.delta = 2;
    p.kappa = -1;
    p.sigma = 4;
    p.eta = 1;
    p.hd = 2;
    p.seeds = {{1, Rational(1)}, {2, Rational(1)}};
    return p;
}

// Config format: one "key = value" pair per line, '#' starts a comment.
// Keys: name, delta, kappa, sigma, eta, hd, seed.<d>.

inline RankOnePair load_pair_config(std::istream& in)
{
    RankOnePair p;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        // trim
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("pair config line " + std::to_string(lineno) +
                                        ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "name") {
                p.name = value;
            } else if (key == "delta") {
                p.delta = std::stol(value);
            } else if (key == "kappa") {
                p.kappa = std::stol(value);
            } else if (key == "sigma") {
                p.sigma = std::stol(value);
            } else if (key == "eta") {
                p.eta = std::stol(value);
            } else if (key == "hd") {
                p.hd = std::stol(value);
            } else if (key.rfind("seed.", 0) == 0) {
                const long d = std::stol(key.substr(5));
                p.seeds[d] = parse_rational(value);
            } else {
                throw std::invalid_argument("unknown key \"" + key + "\"");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("pair config line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    p.validate();
    return p;
}

inline void save_pair_config(const RankOnePair& p, std::ostream& out)
{
    out << "name = " << p.name << "\n"
        << "delta = " << p.delta << "\n"
        << "kappa = " << p.kappa << "\n"
        << "sigma = " << p.sigma << "\n"
        << "eta = " << p.eta << "\n"
        << "hd = " << p.hd << "\n";
    for (const auto& [d, v] : p.seeds) {
        out << "seed." << d << " = " << to_string(v) << "\n";
    }
}

inline bool operator==(const RankOnePair& a, const RankOnePair& b)
{
    return a.name == b.name && a.delta == b.delta && a.kappa == b.kappa && a.sigma == b.sigma &&
           a.eta == b.eta && a.hd == b.hd && a.seeds == b.seeds;
}

} // namespace relgw
