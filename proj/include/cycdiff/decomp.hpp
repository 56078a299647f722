/* Decomposition of the space V of holomorphic differentials into
 * indecomposables V(lambda,k): the filtration dimensions c(lambda,k),
 * the divisor degrees deg E_{k,lambda}, the multiplicities
 * d(lambda,k) = c(lambda,k-1) - c(lambda,k), and the tame/unramified
 * special case d^*.
 *
 * d is computed by differencing c; the closed forms of the main theorem
 * are recomputed branch by branch and any disagreement raises, as does a
 * negative multiplicity.  Both only happen for towers that pass surface
 * validation but are not geometrically realizable.
 */

#pragma once

#include "cycdiff/boseck.hpp"

#include <map>
#include <string>
#include <vector>

namespace cycdiff {

struct ModuleLabel {
    long long lambda;  // 0..n-1
    long long k;       // 1..p^ell
    bool operator<(const ModuleLabel& o) const {
        return lambda != o.lambda ? lambda < o.lambda : k < o.k;
    }
    bool operator==(const ModuleLabel& o) const {
        return lambda == o.lambda && k == o.k;
    }
};

struct DecompositionTable {
    std::map<ModuleLabel, long long> mult;  // only nonzero entries
    unsigned long long tower_hash = 0;
    Genera genera;

    long long multiplicity(long long lambda, long long k) const {
        auto it = mult.find(ModuleLabel{lambda, k});
        return it == mult.end() ? 0 : it->second;
    }
    long long dimension() const;  // sum k * d(lambda,k)

    /* c(lambda,k) = sum_{j >= k+1} d(lambda,j) */
    long long c_from_table(long long lambda, long long k) const;

    std::string to_csv() const;  // columns lambda,k,d; lambda then k ascending
};

/* Divisor E_{k,lambda} before and after coefficient reduction. */
struct DivisorSketch {
    struct Entry {
        std::string place;
        Rat raw;           // rational coefficient before reduction
        long long reduced; // floor(raw)
    };
    std::vector<Entry> entries;
    long long a_part = 0;  // alpha_lambda * deg A (integral divisor part)
    long long degree() const;
};

/* deg E_{k,lambda} from the reduced divisor coefficients; Case-1 k only
 * (0 <= k < p^ell - p^r).  Independent route to gamma(k,lambda). */
DivisorSketch divisor_E(const BoseckContext& ctx, long long k, long long lambda);
long long deg_E(const BoseckContext& ctx, long long k, long long lambda);

/* Lambda_{k,lambda} = 1 iff deg E_{k,lambda} = 0 iff gamma(k,lambda) = 0. */
int lambda_indicator(const BoseckContext& ctx, long long k, long long lambda);

/* c(lambda,k) for 0 <= k <= p^ell - 1. */
long long c_value(const BoseckContext& ctx, long long lambda, long long k);

/* d(lambda,k) for 1 <= k <= p^ell. */
long long d_value(const BoseckContext& ctx, long long lambda, long long k);

DecompositionTable decompose(const TowerData& tower);
DecompositionTable decompose(const BoseckContext& ctx);

/* Tamagawa/Kani specialization: towers whose wild part is everywhere
 * unramified.  d^*(lambda,p^ell) = g_{F^G} - 1 + Gamma_lambda for every
 * lambda, plus one extra copy of the trivial module V(0,1). */
DecompositionTable d_star_table(const TowerData& tower);
long long d_star(const BoseckContext& ctx, long long lambda, long long k);

}  // namespace cycdiff
