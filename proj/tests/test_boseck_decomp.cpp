#include "cycdiff/boseck.hpp"
#include "cycdiff/decomp.hpp"
#include "cycdiff/sweep.hpp"

#include "doctest.h"

using namespace cycdiff;

namespace {

TowerData artin_schreier(long long p, long long m) {
    TowerData t;
    t.group = {p, 1, 1, 1};
    t.base_genus = 0;
    t.branch_points = {{"P0", 0, WildData{{m}, 1, WildData::delta_for_single_jump(m, p)}}};
    return t;
}

TowerData z6_tower() {
    TowerData t;
    t.group = {3, 1, 2, 1};
    t.base_genus = 0;
    t.branch_points = {{"P0", 1, WildData{{2}, 1, 6}}, {"Pinf", 1, {}}};
    return t;
}

TowerData kummer3() {
    TowerData t;
    t.group = {7, 0, 3, 1};
    t.base_genus = 0;
    t.branch_points = {{"Q0", 1, {}}, {"Q1", 1, {}}, {"Qinf", 1, {}}};
    return t;
}

}  // namespace

TEST_CASE("w_valuation") {
    BoseckContext as(artin_schreier(5, 3));
    CHECK(as.w_valuation(0, 2) == -6);
    CHECK(as.w_valuation(0, 0) == 0);

    TowerData t;  // ell = 2 with jumps (1,5): k=4 has digits (1,1)
    t.group = {3, 2, 1, 1};
    t.base_genus = 0;
    long long delta = (1 + 1) * (9 - 1) + (5 - 1) * (3 - 1);  // lower breaks 1, 5
    t.branch_points = {{"P0", 0, WildData{{1, 5}, 2, delta}}};
    BoseckContext ctx(t);
    CHECK(ctx.w_valuation(0, 4) == -8);
}

TEST_CASE("nu") {
    BoseckContext as(artin_schreier(5, 3));  // delta = 16
    CHECK(as.w_valuation(0, 3) == -9);
    CHECK(as.nu(0, 3) == 1);  // floor(7/5)
    CHECK(as.nu(0, 0) == 3);  // floor(16/5)

    BoseckContext z6(z6_tower());  // delta = 6, e = 3
    CHECK(z6.w_valuation(0, 2) == -4);
    CHECK(z6.nu(0, 2) == 0);  // floor(2/3)
}

TEST_CASE("alpha") {
    BoseckContext k3(kummer3());
    CHECK(k3.alpha(2) == 2);
    CHECK(k3.alpha(0) == 0);

    TowerData t;
    t.group = {3, 0, 5, 2};  // r_act = 2
    t.base_genus = 0;
    t.branch_points = {{"Q0", 1, {}}, {"Q1", 4, {}}};
    BoseckContext ctx(t);
    CHECK(ctx.alpha(1) == 3);  // 2*3 = 6 = 1 mod 5
}

TEST_CASE("gamma: worked instances") {
    BoseckContext as(artin_schreier(5, 3));
    std::vector<long long> col;
    for (long long k = 0; k <= 4; ++k) col.push_back(as.gamma(k, 0));
    CHECK(col == std::vector<long long>{3, 2, 2, 1, 0});
    CHECK(as.gamma(5, 0) == 0);  // k = p^ell uses the nu-zeroed reduction

    BoseckContext z6(z6_tower());
    std::vector<long long> l0, l1;
    for (long long k = 0; k <= 2; ++k) {
        l0.push_back(z6.gamma(k, 0));
        l1.push_back(z6.gamma(k, 1));
    }
    CHECK(l0 == std::vector<long long>{1, 1, 0});
    CHECK(l1 == std::vector<long long>{2, 1, 1});

    BoseckContext k3(kummer3());
    CHECK(k3.gamma(0, 0) == 0);  // alpha_0 = 0 kills every term
    CHECK(k3.gamma(0, 1) == 2);
    CHECK(k3.gamma(0, 2) == 1);
}

TEST_CASE("gamma reductions: n = 1 and p^ell = 1") {
    /* n = 1: Gamma_k = sum_mu nu_{mu,k} */
    SweepRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        TowerData t = random_tower(rng, {2, 3, 5}, {1}, 2);
        BoseckContext ctx(t);
        for (long long k = 0; k < ctx.p_ell(); ++k) {
            long long sum_nu = 0;
            for (size_t m = 0; m < ctx.wild_orbit_count(); ++m) sum_nu += ctx.nu(m, k);
            long long pr = pow_ll(t.group.p, ctx.wild_defect());
            if (k < ctx.p_ell() - pr) CHECK(ctx.gamma(k, 0) == sum_nu);
        }
    }
    /* p^ell = 1: Gamma_lambda = sum_j <-alpha Phi_j / e'_j> = gamma_bar */
    for (int trial = 0; trial < 50; ++trial) {
        TowerData t = random_tower(rng, {2, 3, 5}, {2, 3, 4, 5}, 0);
        if (t.group.n == 1) continue;
        BoseckContext ctx(t);
        for (long long lambda = 0; lambda < t.group.n; ++lambda)
            CHECK(ctx.gamma(0, lambda) == ctx.gamma_bar(lambda));
    }
}

TEST_CASE("remainders mod p^ell are a full residue system at totally ramified orbits") {
    SweepRng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        TowerData t = random_tower(rng, {2, 3}, {1, 2, 3}, 3);
        BoseckContext ctx(t);
        const long long pl = ctx.p_ell();
        for (size_t m = 0; m < ctx.wild_orbit_count(); ++m) {
            const BranchPoint& bp = t.branch_points[ctx.wild_orbits()[m]];
            if (wild_e(t, bp) != pl) continue;
            std::set<long long> seen;
            for (long long k = 0; k < pl; ++k)
                seen.insert(mod_ll(ctx.shifted_valuation(m, k), pl));
            CHECK(static_cast<long long>(seen.size()) == pl);
        }
    }
}

TEST_CASE("deg_E equals gamma and the worked values") {
    BoseckContext z6(z6_tower());
    CHECK(deg_E(z6, 0, 1) == 2);
    CHECK(deg_E(z6, 0, 1) == z6.gamma(0, 1));

    BoseckContext as(artin_schreier(5, 3));
    CHECK(deg_E(as, 1, 0) == 2);  // reduces to nu_{1,1} = floor(13/5)

    /* lambda = 0 with every nu = 0 makes every term vanish */
    BoseckContext k3(kummer3());
    CHECK_THROWS(deg_E(k3, 0, 0));  // p^ell = 1 has empty Case-1 domain
}

TEST_CASE("lambda indicator") {
    BoseckContext z6(z6_tower());
    CHECK(lambda_indicator(z6, 2, 0) == 1);  // Gamma_{2,0} = 0
    CHECK(lambda_indicator(z6, 0, 1) == 0);  // Gamma = 2
    CHECK(lambda_indicator(z6, 0, 0) == 0);  // Gamma = 1
}

TEST_CASE("c values: worked instances") {
    BoseckContext as(artin_schreier(5, 3));
    std::vector<long long> c;
    for (long long k = 0; k <= 4; ++k) c.push_back(c_value(as, 0, k));
    CHECK(c == std::vector<long long>{2, 1, 1, 0, 0});

    BoseckContext z6(z6_tower());
    CHECK(c_value(z6, 1, 0) == 1);
    CHECK(c_value(z6, 0, 0) == 0);
    CHECK(c_value(z6, 0, 2) == 0);  // k = p^ell - p^r, lambda = 0 -> g_{F^G}
}

TEST_CASE("d values and the full decomposition: worked instances") {
    auto table_as = decompose(artin_schreier(5, 3));
    CHECK(table_as.multiplicity(0, 1) == 1);
    CHECK(table_as.multiplicity(0, 3) == 1);
    CHECK(table_as.mult.size() == 2);
    CHECK(table_as.dimension() == 4);

    auto table_z6 = decompose(z6_tower());
    CHECK(table_z6.mult.size() == 1);
    CHECK(table_z6.multiplicity(1, 1) == 1);

    /* trivial group: V is g copies of the trivial module */
    TowerData triv;
    triv.group = {5, 0, 1, 1};
    triv.base_genus = 3;
    CHECK(decompose(triv).multiplicity(0, 1) == 3);
    TowerData triv0 = triv;
    triv0.base_genus = 0;
    CHECK(decompose(triv0).mult.empty());
}

TEST_CASE("decomposition table CSV") {
    auto t = decompose(artin_schreier(5, 3));
    CHECK(t.to_csv() == "lambda,k,d\n0,1,1\n0,3,1\n");
}

TEST_CASE("d_star") {
    /* everywhere-unramified tame tower over genus 2 */
    TowerData unram;
    unram.group = {3, 2, 2, 1};
    unram.base_genus = 2;
    unram.genus_ErT = 9 * (2 - 1) + 1;
    auto table = d_star_table(unram);
    for (long long lambda = 0; lambda < 2; ++lambda)
        CHECK(table.multiplicity(lambda, 9) == 1);  // g - 1
    CHECK(table.multiplicity(0, 1) == 1);
    CHECK(table.dimension() == genus_F(unram));

    /* tame elliptic Kummer: eigenvalue multiplicities (0,1,0) */
    TowerData k3;
    k3.group = {7, 0, 3, 1};
    k3.base_genus = 0;
    k3.branch_points = {{"Q0", 1, {}}, {"Q1", 1, {}}, {"Qinf", 1, {}}};
    auto t3 = d_star_table(k3);
    CHECK(t3.multiplicity(0, 1) == 0);
    CHECK(t3.multiplicity(1, 1) == 1);
    CHECK(t3.multiplicity(2, 1) == 0);

    /* lambda = 0 with ramification: m_0 = g_{F^T} = g_{F^G} when p^ell = 1 */
    TowerData k3g;
    k3g = k3;
    k3g.base_genus = 2;
    CHECK(d_star_table(k3g).multiplicity(0, 1) == 2);

    CHECK_THROWS(d_star_table(z6_tower()));  // wild data present
}

TEST_CASE("decompose equals d_star on tame-only towers") {
    SweepRng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        TowerData t = random_tower(rng, {2, 3, 5}, {1, 2, 3, 4}, 0);
        auto a = decompose(t);
        auto b = d_star_table(t);
        CHECK(a.mult == b.mult);
    }
}

TEST_CASE("special-case reductions for n = 1 (regular representation)") {
    /* r = 0 (totally ramified): d(p^ell) = g_{F^G} */
    SweepRng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        TowerData t = random_tower(rng, {2, 3, 5}, {1}, 3);
        BoseckContext ctx(t);
        if (ctx.wild_defect() != 0) continue;
        CHECK(d_value(ctx, 0, ctx.p_ell()) == t.base_genus);
    }
    /* r != 0 via an unramified wild part: d(p^ell) = g_{F^G} - 1 and
     * d(0, p^ell - p^r + 1) picks up the extra trivial summand */
    for (long long p : {2, 3, 5})
        for (int ell = 1; ell <= 2; ++ell)
            for (long long g : {1, 2, 3}) {
                TowerData t;
                t.group = {p, ell, 1, 1};
                t.base_genus = g;
                t.genus_ErT = pow_ll(p, ell) * (g - 1) + 1;
                BoseckContext ctx(t);
                CHECK(ctx.wild_defect() == ell);
                CHECK(d_value(ctx, 0, ctx.p_ell()) == g - 1);
                CHECK(d_value(ctx, 0, 1) == 1);
                auto table = decompose(ctx);
                CHECK(table.dimension() == genus_F(t));
            }
}

TEST_CASE("internal identities on random geometric towers") {
    SweepRng rng(42);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        TowerData t = random_tower(rng, {2, 3, 5}, {1, 2, 3, 4}, 3);
        BoseckContext ctx(t);
        const long long pl = ctx.p_ell();
        const long long pr = pow_ll(t.group.p, ctx.wild_defect());
        /* gamma = deg_E on the whole Case-1 domain */
        for (long long lambda = 0; lambda < t.group.n; ++lambda)
            for (long long k = 0; k < pl - pr; ++k)
                CHECK(ctx.gamma(k, lambda) == deg_E(ctx, k, lambda));
        /* dimension identity and monotonicity are asserted inside decompose */
        auto table = decompose(ctx);
        CHECK(table.dimension() == ctx.genera().g_F);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("K[G] bookkeeping: the regular module is the sum of V(lambda, p^ell)") {
    GroupSpec g{3, 2, 4, 1};
    long long dim = 0;
    for (long long lambda = 0; lambda < g.n; ++lambda) dim += g.p_ell();
    CHECK(dim == g.order());
}
