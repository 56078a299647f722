#include "cycdiff/tower.hpp"

#include "doctest.h"

using namespace cycdiff;

namespace {

TowerData kummer3() {
    TowerData t;
    t.group = {7, 0, 3, 1};
    t.base_genus = 0;
    t.branch_points = {{"Q0", 1, {}}, {"Q1", 1, {}}, {"Qinf", 1, {}}};
    return t;
}

/* y^5 - y = 1/x^3 over F_5: one wild point, delta = (3+1)(5-1) = 16 */
TowerData artin_schreier_5_3() {
    TowerData t;
    t.group = {5, 1, 1, 1};
    t.base_genus = 0;
    t.branch_points = {{"P0", 0, WildData{{3}, 1, 16}}};
    return t;
}

/* Z/6 worked instance: y^2 = x, z^3 - z = 1/x */
TowerData z6_tower() {
    TowerData t;
    t.group = {3, 1, 2, 1};
    t.base_genus = 0;
    t.branch_points = {{"P0", 1, WildData{{2}, 1, 6}}, {"Pinf", 1, {}}};
    return t;
}

}  // namespace

TEST_CASE("validate accepts the worked towers") {
    CHECK(validate(kummer3()).ok());
    CHECK(validate(artin_schreier_5_3()).ok());
    CHECK(validate(z6_tower()).ok());
}

TEST_CASE("validate rejects bad phi sums and bad wild data") {
    TowerData t = kummer3();
    t.branch_points.pop_back();
    auto rep = validate(t);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (auto& e : rep.errors) found |= e.find("sum of phi_i") != std::string::npos;
    CHECK(found);

    TowerData w = artin_schreier_5_3();
    w.branch_points[0].wild->jumps = {5};  // divisible by p
    CHECK_FALSE(validate(w).ok());

    w = artin_schreier_5_3();
    w.branch_points[0].wild->delta = 2;  // < e_mu - 1
    CHECK_FALSE(validate(w).ok());

    w = artin_schreier_5_3();
    w.branch_points[0].wild.reset();  // n = 1 point with no wild data
    CHECK_FALSE(validate(w).ok());
}

TEST_CASE("genus_FP") {
    TowerData trivial;
    trivial.group = {5, 1, 1, 1};
    trivial.base_genus = 3;
    trivial.branch_points = {{"P0", 0, WildData{{1}, 1, 8}}};
    CHECK(genus_FP(trivial) == 3);  // n = 1 leaves the genus alone

    CHECK(genus_FP(kummer3()) == 1);  // 2g-2 = 3(-2) + 3*2 = 0

    TowerData k2 = z6_tower();
    CHECK(genus_FP(k2) == 0);  // 2g-2 = 2(-2) + 2 = -2
}

TEST_CASE("genus_F") {
    CHECK(genus_F(artin_schreier_5_3()) == 4);  // 2g-2 = -10 + 16 = 6
    CHECK(genus_F(z6_tower()) == 1);            // 2g-2 = 3(-2) + 6 = 0

    TowerData nw = kummer3();  // no wild part at all
    CHECK(genus_F(nw) == genus_FP(nw));

    TowerData unram;  // unramified p-part over genus 2, ell = 1
    unram.group = {3, 1, 1, 1};
    unram.base_genus = 2;
    unram.genus_ErT = 3 * (2 - 1) + 1;
    CHECK(genus_F(unram) == 3 * (2 - 1) + 1);  // 2g-2 = 3*(2*2-2)
}

TEST_CASE("wild defect and deg A") {
    CHECK(wild_defect(artin_schreier_5_3()) == 0);
    CHECK(wild_defect(z6_tower()) == 0);
    CHECK(wild_defect(kummer3()) == 0);  // ell = 0

    TowerData part;  // ell = 2, only epsilon = 1 ramification
    part.group = {3, 2, 1, 1};
    part.base_genus = 2;
    part.branch_points = {{"P0", 0, WildData{{1, 1}, 1, 4}}};
    part.genus_ErT = 3 * (2 - 1) + 1;
    CHECK(wild_defect(part) == 1);

    CHECK(deg_A(kummer3()) == -1);
    CHECK(deg_A(z6_tower()) == -1);
}

TEST_CASE("genus_ErT is required when r != 0") {
    TowerData unram;
    unram.group = {3, 2, 1, 1};
    unram.base_genus = 2;
    CHECK_FALSE(validate(unram).ok());  // r = ell = 2 without genus_ErT
    unram.genus_ErT = 9 * (2 - 1) + 1;
    CHECK(validate(unram).ok());
    /* a deviating value validates with a warning */
    unram.genus_ErT = 4;
    auto rep = validate(unram);
    CHECK(rep.ok());
    CHECK(!rep.warnings.empty());
}

TEST_CASE("tower counts") {
    auto c = tower_counts(z6_tower());
    CHECK(c.t == 2);
    CHECK(c.t0 == 1);
    CHECK(c.s == 1);
    CHECK(c.s0 == 1);

    TowerData mixed;  // n=4: tame-and-wild point with e' = 2 plus a wild-only orbit
    mixed.group = {3, 1, 4, 1};
    mixed.base_genus = 0;
    mixed.branch_points = {
        {"Q0", 2, WildData{{2}, 1, 6}},
        {"Q1", 1, {}},
        {"Q2", 1, {}},
        {"P3", 0, WildData{{1}, 1, 4}},
    };
    auto c2 = tower_counts(mixed);
    CHECK(c2.t == 3);
    CHECK(c2.t0 == 2);
    CHECK(c2.s == 2);
    CHECK(c2.s0 == 2);  // n/e' = 2 places over Q0
}
