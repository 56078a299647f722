#include "cycdiff/weier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cycdiff {

long long GapProfile::total() const {
    long long t = 0;
    for (const auto& [cls, count] : classes) t += count;
    return t;
}

long long GapProfile::mu(long long i0) const {
    long long t = 0;
    for (const auto& [cls, count] : classes)
        if (cls.first == i0) t += count;
    return t;
}

namespace {

const BranchPoint& checked_point(const BoseckContext& ctx, size_t branch_index) {
    return ctx.tower().branch_points.at(branch_index);
}

/* e(P) = e' * p^epsilon must equal n * p^ell */
void require_totally_ramified(const BoseckContext& ctx, size_t branch_index) {
    const TowerData& tower = ctx.tower();
    const BranchPoint& bp = checked_point(ctx, branch_index);
    long long e = ramification_e_prime(tower, bp) * wild_e(tower, bp);
    if (e != tower.group.order())
        throw ValidationError("place '" + bp.id + "' is not totally ramified (e = " +
                              std::to_string(e) + " < " + std::to_string(tower.group.order()) + ")");
}

/* position of the branch point among the wild orbits (needs p^ell > 1) */
size_t orbit_position(const BoseckContext& ctx, size_t branch_index) {
    for (size_t m = 0; m < ctx.wild_orbits().size(); ++m)
        if (ctx.wild_orbits()[m] == branch_index) return m;
    throw ValidationError("place '" + checked_point(ctx, branch_index).id +
                          "' carries no wild data");
}

}  // namespace

long long r_remainder(const BoseckContext& ctx, size_t branch_index, long long k) {
    const long long pl = ctx.p_ell();
    if (k < 0 || k >= pl) throw std::domain_error("r_remainder: k out of range [0, p^ell)");
    if (pl == 1) return 0;
    require_totally_ramified(ctx, branch_index);
    return mod_ll(ctx.shifted_valuation(orbit_position(ctx, branch_index), k), pl);
}

long long psi(const BoseckContext& ctx, size_t branch_index, long long a) {
    const long long pl = ctx.p_ell();
    if (a < 0 || a >= pl) throw std::domain_error("psi: residue out of range [0, p^ell)");
    for (long long k = 0; k < pl; ++k)
        if (r_remainder(ctx, branch_index, k) == a) return k;
    throw InternalError("psi: remainders do not cover all residues mod p^ell");
}

GapProfile gap_classes(const BoseckContext& ctx, size_t branch_index) {
    require_totally_ramified(ctx, branch_index);
    const long long n = ctx.n(), pl = ctx.p_ell();
    GapProfile gp;
    gp.place = checked_point(ctx, branch_index).id;
    gp.d = n * pl;
    for (long long lambda = 0; lambda < n; ++lambda)
        for (long long k = 0; k < pl; ++k) {
            long long c = c_value(ctx, lambda, k);
            auto cls = std::make_pair(mod_ll(ctx.alpha(lambda) + 1, n),
                                      mod_ll(r_remainder(ctx, branch_index, k) + 1, pl));
            auto [it, inserted] = gp.classes.emplace(cls, c);
            if (!inserted) {
                std::ostringstream os;
                os << "gap class (" << cls.first << "," << cls.second
                   << ") hit twice: preconditions violated";
                throw InternalError(os.str());
            }
        }
    if (gp.total() != ctx.genera().g_F)
        throw InternalError("gap_classes: class counts do not sum to the genus");
    return gp;
}

std::vector<long long> full_gaps(const BoseckContext& ctx, size_t branch_index) {
    require_totally_ramified(ctx, branch_index);
    if (ctx.genera().g_FP != 0)
        throw ValidationError("full gap enumeration unavailable for g_{F^P} > 0; use gap_classes");
    const long long n = ctx.n(), pl = ctx.p_ell();
    std::vector<long long> gaps;
    for (long long k = 0; k < pl; ++k) {
        long long level = 0;
        for (long long lambda = 0; lambda < n; ++lambda)
            level += c_value(ctx, lambda, k);
        long long r = r_remainder(ctx, branch_index, k);
        /* level-k differentials vanish to the consecutive orders r + p^ell*xi */
        for (long long xi = 0; xi < level; ++xi)
            gaps.push_back(r + pl * xi + 1);
    }
    std::sort(gaps.begin(), gaps.end());
    if (static_cast<long long>(gaps.size()) != ctx.genera().g_F ||
        std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end())
        throw InternalError("full_gaps: gap list does not have g_F distinct entries");
    return gaps;
}

std::set<long long> small_gaps(const BoseckContext& ctx, size_t branch_index) {
    if (ctx.n() != 1)
        throw ValidationError("small_gaps: requires n = 1");
    if (ctx.genera().g_base != 0)
        throw ValidationError("small_gaps: requires a rational base (g_{F^G} = 0)");
    require_totally_ramified(ctx, branch_index);
    const long long pl = ctx.p_ell();
    std::set<long long> out;
    for (long long k = 0; k + 1 < pl; ++k)
        if (ctx.gamma(k, 0) >= 2)
            out.insert(r_remainder(ctx, branch_index, k) + 1);
    return out;
}

GapProfile gap_profile(const BoseckContext& ctx, size_t branch_index) {
    GapProfile gp = gap_classes(ctx, branch_index);
    if (ctx.genera().g_FP == 0) {
        gp.full_gaps = full_gaps(ctx, branch_index);
        gp.has_full_gaps = true;
    }
    if (ctx.n() == 1 && ctx.genera().g_base == 0) {
        gp.small_gaps = small_gaps(ctx, branch_index);
        gp.has_small_gaps = true;
    }
    return gp;
}

std::vector<long long> semigroup_gaps(const std::vector<long long>& generators,
                                      long long bound) {
    if (generators.empty())
        throw ValidationError("semigroup_gaps: need at least one generator");
    std::vector<long long> gens;
    for (long long g : generators) {
        if (g < 1) throw ValidationError("semigroup_gaps: generators must be positive");
        gens.push_back(g);
    }
    long long g_all = 0;
    for (long long g : gens) g_all = gcd_ll(g_all, g);
    if (g_all != 1)
        throw ValidationError("semigroup_gaps: gcd of generators is " + std::to_string(g_all) +
                              ", gap set is infinite");
    std::sort(gens.begin(), gens.end());
    long long safe = gens[0] * (gens.size() > 1 ? gens[1] : gens[0]);
    if (bound < safe) bound = safe;
    std::vector<char> in_sg(bound + 1, 0);
    in_sg[0] = 1;
    for (long long x = 1; x <= bound; ++x)
        for (long long g : gens) {
            if (g > x) break;
            if (in_sg[x - g]) { in_sg[x] = 1; break; }
        }
    std::vector<long long> gaps;
    for (long long x = 1; x <= bound; ++x)
        if (!in_sg[x]) gaps.push_back(x);
    /* everything above the Frobenius-safe bound is in the semigroup */
    return gaps;
}

long long frobenius_number(const std::vector<long long>& generators) {
    auto gaps = semigroup_gaps(generators);
    return gaps.empty() ? -1 : gaps.back();
}

Descriptors descriptors(const std::vector<long long>& gaps, long long d) {
    if (d < 1) throw ValidationError("descriptors: d must be positive");
    Descriptors out;
    out.d = d;
    for (long long g : gaps)
        if (g % d == 0)
            throw ValidationError("descriptors: gap congruent to 0 mod d, so d is not in the semigroup");
    for (long long i = 1; i < d; ++i) {
        long long nu = std::count_if(gaps.begin(), gaps.end(),
                                     [&](long long g) { return mod_ll(g, d) == i; });
        out.rows.push_back({i, nu * d + i, nu});
    }
    /* b_i is the least semigroup element congruent to i: the gaps in each
     * class form an initial segment, so b_i itself must not be a gap */
    for (const auto& row : out.rows)
        for (long long g : gaps)
            if (g == row.b_i)
                throw ValidationError("descriptors: class " + std::to_string(row.i) +
                                      " has non-contiguous gaps; not a semigroup gap set");
    return out;
}

}  // namespace cycdiff
