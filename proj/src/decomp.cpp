#include "cycdiff/decomp.hpp"

#include <sstream>

namespace cycdiff {

long long DecompositionTable::dimension() const {
    long long dim = 0;
    for (const auto& [label, d] : mult) dim += label.k * d;
    return dim;
}

long long DecompositionTable::c_from_table(long long lambda, long long k) const {
    long long c = 0;
    for (const auto& [label, d] : mult)
        if (label.lambda == lambda && label.k >= k + 1) c += d;
    return c;
}

std::string DecompositionTable::to_csv() const {
    std::ostringstream os;
    os << "lambda,k,d\n";
    for (const auto& [label, d] : mult)
        os << label.lambda << "," << label.k << "," << d << "\n";
    return os.str();
}

long long DivisorSketch::degree() const {
    long long deg = a_part;
    for (const auto& e : entries) deg += e.reduced;
    return deg;
}

DivisorSketch divisor_E(const BoseckContext& ctx, long long k, long long lambda) {
    const TowerData& tower = ctx.tower();
    const long long pl = ctx.p_ell();
    const long long pr = pow_ll(tower.group.p, ctx.wild_defect());
    if (k < 0 || k >= pl - pr)
        throw std::domain_error("divisor_E: k outside the Case-1 domain [0, p^ell - p^r)");

    const long long n = tower.group.n;
    const long long a = ctx.alpha(lambda);
    DivisorSketch sk;
    sk.a_part = a * deg_A(tower);

    size_t wild_index = 0;
    for (const auto& bp : tower.branch_points) {
        long long nu = bp.is_wild() ? ctx.nu(wild_index++, k) : 0;
        if (bp.is_tame()) {
            long long ep = ramification_e_prime(tower, bp);
            /* coefficient alpha phi / n + (e'-1)/e' + nu/e' of the point
             * below; the nu part is the 1/n-scaled norm of the nu-weighted
             * n/e' conjugate wild places above it. */
            Rat raw = Rat(a * bp.tame_phi, n) + Rat(ep - 1, ep) + Rat(nu, ep);
            sk.entries.push_back({bp.id, raw, static_cast<long long>(rfloor(raw))});
        } else {
            /* wild-only orbit: the n conjugates in the orbit below give an
             * integer coefficient nu */
            sk.entries.push_back({bp.id, Rat(nu), nu});
        }
    }
    return sk;
}

long long deg_E(const BoseckContext& ctx, long long k, long long lambda) {
    return divisor_E(ctx, k, lambda).degree();
}

int lambda_indicator(const BoseckContext& ctx, long long k, long long lambda) {
    return ctx.gamma(k, lambda) == 0 ? 1 : 0;
}

namespace {

/* Cross-check gamma against the divisor-degree route on the Case-1 domain. */
long long gamma_checked(const BoseckContext& ctx, long long k, long long lambda, bool case1) {
    long long g = ctx.gamma(k, lambda);
    if (case1) {
        long long deg = deg_E(ctx, k, lambda);
        if (deg != g) {
            std::ostringstream os;
            os << "deg E_{" << k << "," << lambda << "} = " << deg
               << " disagrees with Gamma = " << g;
            throw InternalError(os.str());
        }
    }
    return g;
}

long long case2_c(const BoseckContext& ctx, long long lambda, long long k) {
    const long long pr = pow_ll(ctx.tower().group.p, ctx.wild_defect());
    long long g_ErT = ctx.genera().g_ErT;
    if ((g_ErT - 1) % pr != 0)
        throw ValidationError("inconsistent genus_ErT: p^r does not divide g_{E_r^T} - 1");
    return (g_ErT - 1) / pr + ctx.gamma(k, lambda);
}

}  // namespace

long long c_value(const BoseckContext& ctx, long long lambda, long long k) {
    const long long pl = ctx.p_ell();
    if (k < 0 || k >= pl)
        throw std::domain_error("c_value: k out of range [0, p^ell)");
    const long long pr = pow_ll(ctx.tower().group.p, ctx.wild_defect());
    const long long g = ctx.genera().g_base;
    long long c;
    if (k < pl - pr) {
        long long gam = gamma_checked(ctx, k, lambda, true);
        c = g - 1 + gam + (gam == 0 ? 1 : 0);
    } else if (k == pl - pr && ctx.alpha(lambda) == 0) {
        c = g;
    } else {
        c = case2_c(ctx, lambda, k);
    }
    if (c < 0) {
        std::ostringstream os;
        os << "c(" << lambda << "," << k << ") = " << c << " is negative: tower not realizable";
        throw ValidationError(os.str());
    }
    return c;
}

namespace {

/* The main theorem's closed forms, recomputed branch by branch as a
 * self-check against the c-differencing route. */
long long d_closed_form(const BoseckContext& ctx, long long lambda, long long k) {
    const long long pl = ctx.p_ell();
    const long long pr = pow_ll(ctx.tower().group.p, ctx.wild_defect());
    const long long g = ctx.genera().g_base;
    const bool lambda0 = ctx.alpha(lambda) == 0;

    if (k == pl) {
        if (ctx.wild_defect() == 0) {
            long long gam = ctx.gamma(pl, lambda);
            /* Lambda_{p^ell,lambda}: E is alpha/n div(b)-shaped, principal
             * only for lambda = 0 on a connected cover */
            return g - 1 + gam + (lambda0 && gam == 0 ? 1 : 0);
        }
        return case2_c(ctx, lambda, pl - 1);
    }
    if (k < pl - pr) {
        long long gk1 = ctx.gamma(k - 1, lambda), gk = ctx.gamma(k, lambda);
        long long m = (gk1 == 0 ? 1 : 0) - (gk == 0 ? 1 : 0);
        return gk1 - gk + m;
    }
    if (k == pl - pr) {
        long long gk1 = ctx.gamma(k - 1, lambda);
        long long l1 = gk1 == 0 ? 1 : 0;
        if (lambda0) return gk1 + l1 - 1;
        return gk1 - ctx.gamma(k, lambda) + l1 + (g - 1) - (ctx.genera().g_ErT - 1) / pr;
    }
    /* p^ell - p^r < k <= p^ell - 1 (only reachable when r != 0) */
    return (k == pl - pr + 1 && lambda0) ? 1 : 0;
}

}  // namespace

long long d_value(const BoseckContext& ctx, long long lambda, long long k) {
    const long long pl = ctx.p_ell();
    if (k < 1 || k > pl)
        throw std::domain_error("d_value: k out of range [1, p^ell]");
    long long d = (k == pl) ? c_value(ctx, lambda, pl - 1)
                            : c_value(ctx, lambda, k - 1) - c_value(ctx, lambda, k);
    if (d < 0) {
        std::ostringstream os;
        os << "negative multiplicity d(" << lambda << "," << k << ") = " << d
           << ": tower not realizable";
        throw ValidationError(os.str());
    }
    long long closed = d_closed_form(ctx, lambda, k);
    if (closed != d) {
        std::ostringstream os;
        os << "closed form for d(" << lambda << "," << k << ") gives " << closed
           << " but c-differencing gives " << d;
        throw InternalError(os.str());
    }
    return d;
}

DecompositionTable decompose(const BoseckContext& ctx) {
    const long long pl = ctx.p_ell();
    const long long n = ctx.n();
    DecompositionTable table;
    table.tower_hash = tower_hash(ctx.tower());
    table.genera = ctx.genera();
    for (long long lambda = 0; lambda < n; ++lambda) {
        long long prev = -1;
        for (long long k = 0; k < pl; ++k) {
            long long c = c_value(ctx, lambda, k);
            if (prev >= 0 && c > prev) {
                std::ostringstream os;
                os << "c(" << lambda << "," << k << ") = " << c
                   << " exceeds c(" << lambda << "," << k - 1 << ") = " << prev;
                throw ValidationError(os.str());
            }
            prev = c;
        }
        for (long long k = 1; k <= pl; ++k) {
            long long d = d_value(ctx, lambda, k);
            if (d > 0) table.mult[ModuleLabel{lambda, k}] = d;
        }
    }
    long long dim = table.dimension();
    long long g_F = ctx.genera().g_F;
    if (dim != g_F) {
        std::ostringstream os;
        os << "dimension identity failed: sum k*d = " << dim << " but g_F = " << g_F;
        throw ValidationError(os.str());
    }
    return table;
}

DecompositionTable decompose(const TowerData& tower) {
    return decompose(BoseckContext(tower));
}

long long d_star(const BoseckContext& ctx, long long lambda, long long k) {
    for (const auto& bp : ctx.tower().branch_points)
        if (bp.is_wild())
            throw ValidationError("d_star: tower has wild ramification");
    const long long pl = ctx.p_ell();
    if (k < 1 || k > pl) throw std::domain_error("d_star: k out of range");
    long long base = 0;
    if (k == pl) base = ctx.genera().g_base - 1 + ctx.gamma_bar(lambda);
    if (k == 1 && ctx.alpha(lambda) == 0) base += 1;
    return base;
}

DecompositionTable d_star_table(const TowerData& tower) {
    BoseckContext ctx(tower);
    const long long pl = ctx.p_ell();
    DecompositionTable table;
    table.tower_hash = tower_hash(tower);
    table.genera = ctx.genera();
    for (long long lambda = 0; lambda < ctx.n(); ++lambda)
        for (long long k = 1; k <= pl; ++k) {
            long long d = d_star(ctx, lambda, k);
            if (d < 0)
                throw ValidationError("d_star: negative multiplicity, tower not realizable");
            if (d > 0) table.mult[ModuleLabel{lambda, k}] += d;
        }
    if (table.dimension() != ctx.genera().g_F)
        throw ValidationError("d_star: dimension identity failed");
    return table;
}

}  // namespace cycdiff
