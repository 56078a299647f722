/* Deterministic randomized sweeps.
 *
 * The generator is the 64-bit linear congruential generator
 *     state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
 * with draws taken from the upper 32 bits, so identical (seed, parameters)
 * reproduce identical instances everywhere.
 *
 * random_tower produces geometrically realizable towers: wild orbits are
 * totally ramified with lower ramification breaks built from upper breaks
 * satisfying the cyclic-extension constraints (u_j = p u_{j-1}, or
 * u_j > p u_{j-1} prime to p), scaled by the tame index of the point they
 * sit over, with the different exponent derived from the break filtration.
 * Towers without wild orbits take genus_ErT from the unramified
 * Riemann-Hurwitz relation.  Arbitrary "validated" data would not do: the
 * decomposition identities are theorems about realizable towers only.
 */

#pragma once

#include "cycdiff/curve.hpp"
#include "cycdiff/oracle.hpp"
#include "cycdiff/tower.hpp"

#include <vector>

namespace cycdiff {

class SweepRng {
public:
    explicit SweepRng(unsigned long long seed) : state_(seed) {}
    unsigned long long next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 32;
    }
    /* uniform draw from [0, m) */
    long long uniform(long long m) {
        return static_cast<long long>(next() % static_cast<unsigned long long>(m));
    }
    long long pick(const std::vector<long long>& v) {
        return v[static_cast<size_t>(uniform(static_cast<long long>(v.size())))];
    }

private:
    unsigned long long state_;
};

/* A realizable tower with p from ps, n from ns (filtered coprime to p) and
 * wild exponent ell up to max_ell. */
TowerData random_tower(SweepRng& rng, const std::vector<long long>& ps,
                       const std::vector<long long>& ns, int max_ell);

struct CurveSweepParams {
    std::vector<long long> ps = {2, 3, 5};
    std::vector<long long> ns = {1, 2, 3, 4};
    int max_x_values = 3;
    long long max_pole_order = 7;
};

/* An explicit curve (ell in {0,1}) over the smallest viable F_q, always
 * containing one totally ramified place so that the gap comparisons apply. */
CurveSpec random_curve(SweepRng& rng, const CurveSweepParams& params);

struct SweepResult {
    std::vector<OracleReport> reports;
    long long passed = 0;
    long long failed = 0;
    bool all_pass() const { return failed == 0; }
};

SweepResult run_sweep(unsigned long long seed, long long count, const CurveSweepParams& params);

}  // namespace cycdiff
