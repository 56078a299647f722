#include "cycdiff/tower.hpp"

#include "cycdiff/rational.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cycdiff {

long long GroupSpec::p_ell() const { return pow_ll(p, ell); }
long long GroupSpec::order() const { return n * p_ell(); }

const BranchPoint& TowerData::point(const std::string& id) const {
    for (const auto& bp : branch_points)
        if (bp.id == id) return bp;
    throw ValidationError("no branch point with id '" + id + "'");
}

long long ramification_e_prime(const TowerData& tower, const BranchPoint& bp) {
    if (bp.tame_phi == 0) return 1;
    return tower.group.n / gcd_ll(tower.group.n, bp.tame_phi);
}

long long reduced_phi(const TowerData& tower, const BranchPoint& bp) {
    if (bp.tame_phi == 0) return 0;
    return bp.tame_phi / gcd_ll(tower.group.n, bp.tame_phi);
}

long long wild_e(const TowerData& tower, const BranchPoint& bp) {
    if (!bp.wild) return 1;
    return pow_ll(tower.group.p, bp.wild->epsilon);
}

int wild_defect(const TowerData& tower) {
    int max_eps = 0;
    bool any = false;
    for (const auto& bp : tower.branch_points)
        if (bp.wild) { any = true; max_eps = std::max(max_eps, bp.wild->epsilon); }
    return any ? tower.group.ell - max_eps : tower.group.ell;
}

long long deg_A(const TowerData& tower) {
    long long sum_phi = 0;
    for (const auto& bp : tower.branch_points) sum_phi += bp.tame_phi;
    if (sum_phi % tower.group.n != 0)
        throw ValidationError("deg A is not an integer: sum of phi_i not divisible by n");
    return -sum_phi / tower.group.n;
}

TowerCounts tower_counts(const TowerData& tower) {
    TowerCounts c;
    for (const auto& bp : tower.branch_points) {
        if (bp.is_tame()) {
            ++c.t;
            if (!bp.is_wild()) ++c.t0;
            else c.s0 += tower.group.n / ramification_e_prime(tower, bp);
        }
        if (bp.is_wild()) ++c.s;
    }
    return c;
}

ValidationReport validate(const TowerData& tower) {
    ValidationReport rep;
    auto err = [&rep](const std::string& m) { rep.errors.push_back(m); };
    const GroupSpec& g = tower.group;

    if (!is_prime_ll(g.p)) err("group.p: not prime");
    if (g.ell < 0) err("group.ell: negative");
    if (g.n < 1) err("group.n: must be positive");
    if (g.n > 1 && gcd_ll(g.n, g.p) != 1) err("group: gcd(n, p) != 1");
    long long r_act = mod_ll(g.kummer_exponent, g.n);
    if (gcd_ll(r_act, g.n) != 1) err("group.kummer_exponent: not coprime to n");
    if (g.n > 1 && (g.kummer_exponent < 1 || g.kummer_exponent >= g.n))
        err("group.kummer_exponent: out of range [1, n)");
    if (tower.base_genus < 0) err("base.genus: negative");
    if (!rep.errors.empty()) return rep;

    std::set<std::string> ids;
    long long sum_phi = 0;
    for (size_t i = 0; i < tower.branch_points.size(); ++i) {
        const BranchPoint& bp = tower.branch_points[i];
        std::ostringstream tag;
        tag << "branch[" << (bp.id.empty() ? std::to_string(i) : bp.id) << "]";
        if (!bp.id.empty() && !ids.insert(bp.id).second)
            err(tag.str() + ": duplicate id");
        if (bp.tame_phi < 0 || bp.tame_phi >= g.n)
            err(tag.str() + ".tame_phi: out of range [0, n)");
        if (!bp.is_tame() && !bp.is_wild())
            err(tag.str() + ": neither tame (phi > 0) nor wild data present");
        if (g.n == 1 && !bp.is_wild())
            err(tag.str() + ": n = 1 requires wild data at every branch point");
        sum_phi += std::max<long long>(bp.tame_phi, 0);
        if (bp.wild) {
            const WildData& w = *bp.wild;
            if (g.ell == 0) { err(tag.str() + ".wild: group has no wild part (ell = 0)"); continue; }
            if (static_cast<int>(w.jumps.size()) != g.ell)
                err(tag.str() + ".jumps: expected exactly ell entries");
            for (long long jump : w.jumps) {
                if (jump <= 0) err(tag.str() + ".jumps: entries must be positive");
                else if (jump % g.p == 0) err(tag.str() + ".jumps: entries must be prime to p");
            }
            if (w.epsilon < 1 || w.epsilon > g.ell)
                err(tag.str() + ".epsilon: out of range [1, ell]");
            else if (w.delta < pow_ll(g.p, w.epsilon) - 1)
                err(tag.str() + ".delta: must be >= e_mu - 1");
        }
    }
    if (sum_phi % g.n != 0)
        err("branch points: sum of phi_i not congruent to 0 mod n");
    if (!rep.errors.empty()) return rep;

    int r = wild_defect(tower);
    if (r != 0 && g.order() > 1) {
        if (!tower.genus_ErT)
            err("base.genus_ErT: required when the wild defect r != 0");
        else if (*tower.genus_ErT != forced_genus_ErT(tower))
            rep.warnings.push_back(
                "base.genus_ErT: differs from the Riemann-Hurwitz value p^r*(g-1)+1 "
                "of an everywhere-unramified subcover; data may not be realizable");
    }
    std::set<int> epsilons;
    for (const auto& bp : tower.branch_points)
        if (bp.wild) epsilons.insert(bp.wild->epsilon);
    if (epsilons.size() > 1)
        rep.warnings.push_back("wild orbits with heterogeneous epsilon: Case-2 "
                               "formulas for such towers are implemented as written "
                               "but not certified by the curve oracle");
    return rep;
}

void require_valid(const TowerData& tower) {
    ValidationReport rep = validate(tower);
    if (!rep.ok()) {
        std::string msg = "invalid tower:";
        for (const auto& e : rep.errors) msg += "\n  " + e;
        throw ValidationError(msg);
    }
}

long long genus_FP(const TowerData& tower) {
    const long long n = tower.group.n;
    long long rhs = n * (2 * tower.base_genus - 2);
    for (const auto& bp : tower.branch_points)
        if (bp.is_tame()) rhs += n - n / ramification_e_prime(tower, bp);
    if (rhs % 2 != 0 || rhs < -2)
        throw ValidationError("genus_FP: Riemann-Hurwitz gives no valid genus (2g-2 = " +
                              std::to_string(rhs) + ")");
    return rhs / 2 + 1;
}

long long genus_F(const TowerData& tower) {
    const long long pl = tower.group.p_ell();
    long long rhs = pl * (2 * genus_FP(tower) - 2);
    for (const auto& bp : tower.branch_points) {
        if (!bp.wild) continue;
        long long places_FP = tower.group.n / ramification_e_prime(tower, bp);
        long long e_mu = wild_e(tower, bp);
        rhs += places_FP * (pl / e_mu) * bp.wild->delta;
    }
    if (rhs % 2 != 0 || rhs < -2)
        throw ValidationError("genus_F: Riemann-Hurwitz gives no valid genus (2g-2 = " +
                              std::to_string(rhs) + ")");
    return rhs / 2 + 1;
}

long long forced_genus_ErT(const TowerData& tower) {
    long long pr = pow_ll(tower.group.p, wild_defect(tower));
    return pr * (tower.base_genus - 1) + 1;
}

Genera all_genera(const TowerData& tower) {
    Genera g;
    g.g_base = tower.base_genus;
    g.g_FP = genus_FP(tower);
    g.g_F = genus_F(tower);
    g.g_ErT = wild_defect(tower) == 0 ? tower.base_genus
                                      : tower.genus_ErT.value_or(forced_genus_ErT(tower));
    return g;
}

unsigned long long tower_hash(const TowerData& tower) {
    unsigned long long h = 1469598103934665603ULL;
    auto mix = [&h](long long v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (static_cast<unsigned long long>(v) >> (i * 8)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(tower.group.p); mix(tower.group.ell); mix(tower.group.n);
    mix(tower.group.kummer_exponent); mix(tower.base_genus);
    mix(tower.genus_ErT ? *tower.genus_ErT : -1);
    for (const auto& bp : tower.branch_points) {
        mix(bp.tame_phi);
        if (bp.wild) {
            mix(bp.wild->epsilon); mix(bp.wild->delta);
            for (long long j : bp.wild->jumps) mix(j);
        } else {
            mix(-2);
        }
    }
    return h;
}

}  // namespace cycdiff
