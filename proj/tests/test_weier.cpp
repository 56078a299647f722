#include "cycdiff/sweep.hpp"
#include "cycdiff/weier.hpp"

#include "doctest.h"

#include <set>

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

}  // namespace

TEST_CASE("r_remainder") {
    BoseckContext as(artin_schreier(5, 3));
    std::vector<long long> r;
    for (long long k = 0; k <= 3; ++k) r.push_back(r_remainder(as, 0, k));
    CHECK(r == std::vector<long long>{1, 3, 0, 2});
    CHECK(r_remainder(as, 0, 4) == 4);

    BoseckContext z6(z6_tower());
    std::vector<long long> rz;
    for (long long k = 0; k <= 2; ++k) rz.push_back(r_remainder(z6, 0, k));
    CHECK(rz == std::vector<long long>{0, 1, 2});

    /* k = 0 with delta divisible by p^ell */
    TowerData t = artin_schreier(5, 4);  // delta = 20
    CHECK(r_remainder(BoseckContext(t), 0, 0) == 0);
}

TEST_CASE("psi inverts r_remainder") {
    BoseckContext as(artin_schreier(5, 3));
    CHECK(psi(as, 0, 0) == 2);
    CHECK(psi(as, 0, 1) == 0);
    for (long long k = 0; k < 5; ++k)
        CHECK(psi(as, 0, r_remainder(as, 0, k)) == k);
}

TEST_CASE("gap classes: worked instances") {
    BoseckContext as(artin_schreier(5, 3));
    GapProfile gp = gap_classes(as, 0);
    CHECK(gp.d == 5);
    CHECK(gp.classes.at({0, 2}) == 2);
    CHECK(gp.classes.at({0, 4}) == 1);
    CHECK(gp.classes.at({0, 1}) == 1);
    CHECK(gp.classes.at({0, 3}) == 0);
    CHECK(gp.classes.at({0, 0}) == 0);
    CHECK(gp.total() == 4);
    CHECK(gp.mu(0) == 4);

    BoseckContext z6(z6_tower());
    GapProfile gz = gap_classes(z6, 0);
    CHECK(gz.d == 6);
    CHECK(gz.total() == 1);
    CHECK(gz.classes.at({0, 1}) == 1);

    /* not totally ramified places are rejected */
    CHECK_THROWS_AS(gap_classes(z6, 1), ValidationError);
}

TEST_CASE("full gaps") {
    BoseckContext as(artin_schreier(5, 3));
    CHECK(full_gaps(as, 0) == std::vector<long long>{1, 2, 4, 7});

    BoseckContext small(BoseckContext(artin_schreier(3, 2)));
    CHECK(full_gaps(small, 0) == std::vector<long long>{1});  // gap set of <2,3>

    /* a single column with Gamma = 2 contributes exactly one gap r+1 */
    BoseckContext z6(z6_tower());
    CHECK(full_gaps(z6, 0) == std::vector<long long>{1});
}

TEST_CASE("small gaps") {
    BoseckContext as(artin_schreier(5, 3));
    CHECK(small_gaps(as, 0) == std::set<long long>{1, 2, 4});  // m = 3 is a pole number

    BoseckContext big(BoseckContext(artin_schreier(5, 7)));  // p < m: all of 1..p-1
    CHECK(small_gaps(big, 0) == std::set<long long>{1, 2, 3, 4});

    CHECK_THROWS_AS(small_gaps(BoseckContext(z6_tower()), 0), ValidationError);  // n != 1
}

TEST_CASE("full gaps below p^ell agree with small gaps") {
    SweepRng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        TowerData t = random_tower(rng, {2, 3, 5}, {1}, 2);
        BoseckContext ctx(t);
        if (ctx.wild_orbit_count() != 1) continue;
        size_t branch = ctx.wild_orbits()[0];
        const BranchPoint& bp = t.branch_points[branch];
        if (wild_e(t, bp) != ctx.p_ell()) continue;
        if (ctx.genera().g_FP != 0 || t.base_genus != 0) continue;
        auto fg = full_gaps(ctx, branch);
        std::set<long long> below;
        for (long long g : fg)
            if (g < ctx.p_ell()) below.insert(g);
        CHECK(below == small_gaps(ctx, branch));
        CHECK(static_cast<long long>(fg.size()) == ctx.genera().g_F);
    }
}

TEST_CASE("Artin-Schreier family: full gaps equal the sieve of <m,p>") {
    for (long long p : {3, 5, 7})
        for (long long m = 1; m <= 12; ++m) {
            if (m % p == 0) continue;
            TowerData t = artin_schreier(p, m);
            BoseckContext ctx(t);
            if (ctx.genera().g_F == 0) continue;  // m = 1 covers are rational
            auto fg = full_gaps(ctx, 0);
            auto sieve = semigroup_gaps({m, p});
            CHECK(fg == sieve);
        }
}

TEST_CASE("semigroup gaps by sieve") {
    CHECK(semigroup_gaps({3, 5}) == std::vector<long long>{1, 2, 4, 7});
    CHECK(semigroup_gaps({2, 3}) == std::vector<long long>{1});
    CHECK(semigroup_gaps({1}).empty());
    CHECK(frobenius_number({3, 5}) == 7);
    CHECK_THROWS_AS(semigroup_gaps({2, 4}), ValidationError);
}

TEST_CASE("descriptors") {
    auto d35 = descriptors(semigroup_gaps({3, 5}), 5);
    REQUIRE(d35.rows.size() == 4);
    CHECK(d35.rows[0].b_i == 6);
    CHECK(d35.rows[1].b_i == 12);
    CHECK(d35.rows[2].b_i == 3);
    CHECK(d35.rows[3].b_i == 9);
    CHECK(d35.rows[0].nu_i == 1);
    CHECK(d35.rows[1].nu_i == 2);
    CHECK(d35.rows[2].nu_i == 0);
    CHECK(d35.rows[3].nu_i == 1);

    auto d23 = descriptors(semigroup_gaps({2, 3}), 2);
    REQUIRE(d23.rows.size() == 1);
    CHECK(d23.rows[0].b_i == 3);
    CHECK(d23.rows[0].nu_i == 1);

    CHECK(descriptors({}, 1).rows.empty());  // the full semigroup N
}

TEST_CASE("descriptors match per-class sieve counts on random semigroups") {
    SweepRng rng(5);
    int done = 0;
    while (done < 50) {
        long long a = 2 + rng.uniform(10), b = 2 + rng.uniform(14), c = 2 + rng.uniform(18);
        std::vector<long long> gens = rng.uniform(2) == 0
                                          ? std::vector<long long>{a, b}
                                          : std::vector<long long>{a, b, c};
        long long g = 0;
        for (long long x : gens) g = gcd_ll(g, x);
        if (g != 1) continue;
        auto gaps = semigroup_gaps(gens);
        long long d = *std::min_element(gens.begin(), gens.end());
        auto desc = descriptors(gaps, d);
        for (const auto& row : desc.rows) {
            long long count = 0;
            for (long long gap : gaps)
                if (mod_ll(gap, d) == row.i) ++count;
            CHECK(row.nu_i == count);
            CHECK(row.b_i == row.nu_i * d + row.i);
        }
        ++done;
    }
}

TEST_CASE("gap class totals equal the genus on random towers") {
    SweepRng rng(31);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        TowerData t = random_tower(rng, {2, 3}, {1, 2, 3}, 2);
        BoseckContext ctx(t);
        for (size_t i = 0; i < t.branch_points.size(); ++i) {
            const BranchPoint& bp = t.branch_points[i];
            if (ramification_e_prime(t, bp) * wild_e(t, bp) != t.group.order()) continue;
            GapProfile gp = gap_classes(ctx, i);
            CHECK(gp.total() == ctx.genera().g_F);
            ++done;
            break;
        }
    }
    CHECK(done > 0);
}
