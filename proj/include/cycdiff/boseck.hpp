/* Boseck invariants Gamma_{k,lambda} of a tower, together with the
 * ingredients they are built from: valuations of the Valentini-Madan
 * basis functions w_k at the wild orbits, the floored quotients
 * nu_{mu,k}, and the Kummer exponents alpha_lambda.
 *
 * Gamma_{k,lambda} is the degree of the twisting divisor E_{k,lambda}:
 *
 *   Gamma = sum_i <-alpha Phi_i / e'_i>                      (all tame i)
 *         + sum_j floor(<(alpha Phi_j - 1)/e'_j> + nu_j/e'_j) (tame-and-wild j)
 *         + sum_mu nu_mu                                      (wild-only mu)
 *
 * The nu-terms enter with denominator e'_j at a tame-and-wild point and
 * with denominator 1 at a wild-only orbit: the norm to F^G of the
 * nu-weighted wild places spreads over the n/e' (resp. n) conjugate
 * places of the orbit, which cancels all but e' (resp. 1) of the n in
 * the naive 1/n N(...) coefficient.  For k >= p^ell - p^r (r the wild
 * defect) all nu-terms vanish and Gamma reduces to the tame sum.
 */

#pragma once

#include "cycdiff/rational.hpp"
#include "cycdiff/tower.hpp"

#include <vector>

namespace cycdiff {

class BoseckContext {
public:
    explicit BoseckContext(TowerData tower);

    const TowerData& tower() const { return tower_; }
    const Genera& genera() const { return genera_; }
    int wild_defect() const { return r_; }
    long long p_ell() const { return tower_.group.p_ell(); }
    long long n() const { return tower_.group.n; }

    /* alpha_lambda in [0,n): the unique solution of r_act * alpha = lambda (mod n). */
    long long alpha(long long lambda) const;

    /* v_{P_mu}(w_k) = -sum_j a_j Phi(mu,j) p^(ell-j) <= 0, via the p-adic
     * digits of k (least significant digit first). */
    long long w_valuation(size_t orbit_index, long long k) const;

    /* nu_{mu,k} = floor((delta_mu + v(w_k)) / e_mu); negative values mean
     * the wild data is inconsistent and raise. */
    long long nu(size_t orbit_index, long long k) const;

    /* Gamma_{k,lambda} for 0 <= k <= p^ell; nu-terms are zeroed for
     * k >= p^ell - p^r.  Always a nonnegative integer (raises otherwise). */
    long long gamma(long long k, long long lambda) const;

    /* The tame-only reduction Gamma_lambda = sum_i <-alpha Phi_i/e'_i>
     * (equals gamma(k, lambda) whenever the nu-terms vanish). */
    long long gamma_bar(long long lambda) const;

    /* Indices into tower().branch_points of the wild orbits, in input order. */
    const std::vector<size_t>& wild_orbits() const { return wild_orbits_; }
    size_t wild_orbit_count() const { return wild_orbits_.size(); }

    /* Raw delta_mu + v(w_k) for a wild orbit (used by the gap machinery). */
    long long shifted_valuation(size_t orbit_index, long long k) const;

private:
    TowerData tower_;
    Genera genera_;
    int r_;
    std::vector<size_t> wild_orbits_;
    std::vector<long long> alpha_;               // lambda -> alpha_lambda
    std::vector<std::vector<long long>> nu_;     // [orbit][k], k < p^ell
    bool nu_zeroed(long long k) const;
};

}  // namespace cycdiff
