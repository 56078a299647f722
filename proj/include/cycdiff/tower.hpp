/* Data model for the tower F / F^P / F^G of a cyclic group of order
 * n * p^ell acting on a curve: the degree-n layer is a Kummer extension
 * branched at points with exponents phi_i, the degree-p^ell layer is wild
 * with per-orbit jump, inertia and different data.  Validation plus the
 * derived quantities (e'_i, Phi_i, deg A, counts t, t0, s, s0, wild defect
 * r) and the Riemann-Hurwitz genus computations live here.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycdiff {

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/* Inconsistencies that can only come from library bugs or from data that
 * passed validation but is not geometrically realizable. */
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct GroupSpec {
    long long p = 2;        // characteristic
    int ell = 0;            // wild exponent: |P| = p^ell
    long long n = 1;        // tame order, gcd(n, p) = 1
    long long kummer_exponent = 1;  // r_act: the generator of T sends y to zeta_n^r_act y

    long long p_ell() const;        // p^ell
    long long order() const;        // n * p^ell
};

struct WildData {
    std::vector<long long> jumps;  // (Phi(mu,1), ..., Phi(mu,ell)), each prime to p
    int epsilon = 1;               // inertia order p^epsilon
    long long delta = 0;           // different exponent at each place over the orbit

    /* Different exponent of a degree-p Artin-Schreier step with jump m. */
    static long long delta_for_single_jump(long long m, long long p) {
        return (m + 1) * (p - 1);
    }
};

struct BranchPoint {
    std::string id;
    long long tame_phi = 0;  // phi in [0, n), 0 = unramified in F^P/F^G
    std::optional<WildData> wild;

    bool is_tame() const { return tame_phi > 0; }
    bool is_wild() const { return wild.has_value(); }
};

struct TowerData {
    GroupSpec group;
    long long base_genus = 0;                 // g_{F^G}
    std::vector<BranchPoint> branch_points;
    std::optional<long long> genus_ErT;       // required when wild defect r != 0

    const BranchPoint& point(const std::string& id) const;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

ValidationReport validate(const TowerData& tower);

/* Throwing variant of validate(). */
void require_valid(const TowerData& tower);

/* Derived per-point and global quantities of a (valid) tower. */
long long ramification_e_prime(const TowerData& tower, const BranchPoint& bp);  // n/(n,phi)
long long reduced_phi(const TowerData& tower, const BranchPoint& bp);           // phi/(n,phi)
long long wild_e(const TowerData& tower, const BranchPoint& bp);                // p^epsilon

int wild_defect(const TowerData& tower);   // r = ell - max epsilon (= ell with no wild data)
long long deg_A(const TowerData& tower);   // -sum phi_i / n, an integer on valid data

/* Counts following the tower bookkeeping: t tame-ramified points, t0 of
 * them with no wild data, s wild orbits, s0 places of F^P above the
 * tame-and-wild points. */
struct TowerCounts {
    long long t = 0, t0 = 0, s = 0, s0 = 0;
};
TowerCounts tower_counts(const TowerData& tower);

long long genus_FP(const TowerData& tower);
long long genus_F(const TowerData& tower);

/* Genus forced on the everywhere-unramified subcover E_r^T of F^G by
 * Riemann-Hurwitz: p^r (g-1) + 1. */
long long forced_genus_ErT(const TowerData& tower);

struct Genera {
    long long g_base = 0, g_FP = 0, g_F = 0, g_ErT = 0;
};
Genera all_genera(const TowerData& tower);

/* Deterministic content hash (used to tag decomposition tables/reports). */
unsigned long long tower_hash(const TowerData& tower);

}  // namespace cycdiff
