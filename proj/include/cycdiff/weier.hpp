/* Weierstrass gap structure at a totally ramified point: the remainders
 * r_{mu,k}, gap classes modulo n*p^ell, small gaps and full gap lists
 * (available when g_{F^P} = 0), and numerical semigroup descriptors
 * (b_i, nu_i).
 *
 * Places are addressed by their index in tower().branch_points; they must
 * be totally ramified (e = n * p^ell), which for p^ell > 1 forces the
 * point to carry wild data with epsilon = ell.
 *
 * Convention: a differential vanishing to order x at P witnesses the gap
 * x + 1; every interface reports gaps (1-based), never vanishing orders.
 */

#pragma once

#include "cycdiff/decomp.hpp"

#include <map>
#include <set>
#include <vector>

namespace cycdiff {

struct GapProfile {
    std::string place;
    long long d = 0;  // n * p^ell, the least nonzero pole number
    /* (i mod n, i mod p^ell) -> number of gaps congruent to i mod n*p^ell */
    std::map<std::pair<long long, long long>, long long> classes;
    std::set<long long> small_gaps;          // n = 1, rational base only
    std::vector<long long> full_gaps;        // g_{F^P} = 0 only

    bool has_small_gaps = false;
    bool has_full_gaps = false;

    long long total() const;
    /* mu_{i0}: gaps congruent to i0 mod n (Brauer character count) */
    long long mu(long long i0) const;
};

/* r_{mu,k} = (delta_mu + v(w_k)) mod p^ell; identically 0 when p^ell = 1. */
long long r_remainder(const BoseckContext& ctx, size_t branch_index, long long k);

/* The inverse map: the unique k in [0,p^ell) with r_remainder(mu,k) = a. */
long long psi(const BoseckContext& ctx, size_t branch_index, long long a);

/* Gap classes at a totally ramified place: class
 * ((alpha_lambda+1) mod n, (r_{mu,k}+1) mod p^ell) has c(lambda,k) gaps. */
GapProfile gap_classes(const BoseckContext& ctx, size_t branch_index);

/* Full sorted gap list; available when g_{F^P} = 0. */
std::vector<long long> full_gaps(const BoseckContext& ctx, size_t branch_index);

/* Gaps below p^ell for n = 1 covers of a rational base:
 * { r_{mu,k}+1 : 0 <= k <= p^ell-2, Gamma_k >= 2 }. */
std::set<long long> small_gaps(const BoseckContext& ctx, size_t branch_index);

/* Fills classes plus small/full gaps where the preconditions hold. */
GapProfile gap_profile(const BoseckContext& ctx, size_t branch_index);

/* Numerical semigroups. */
std::vector<long long> semigroup_gaps(const std::vector<long long>& generators,
                                      long long bound = 0);
long long frobenius_number(const std::vector<long long>& generators);

struct Descriptors {
    struct Row {
        long long i;    // residue class 1..d-1
        long long b_i;  // least semigroup element congruent to i mod d
        long long nu_i; // (b_i - i)/d = number of gaps congruent to i mod d
    };
    long long d = 0;
    std::vector<Row> rows;
};

/* Descriptors from a finite gap set with least nonzero element d of the
 * semigroup: nu_i counts the gaps congruent to i, b_i = nu_i * d + i. */
Descriptors descriptors(const std::vector<long long>& gaps, long long d);

}  // namespace cycdiff
