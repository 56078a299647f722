#include "cycdiff/fq.hpp"
#include "cycdiff/matrix.hpp"
#include "cycdiff/poly.hpp"
#include "cycdiff/rational.hpp"

#include "doctest.h"

#include <random>

using namespace cycdiff;

namespace {
/* deterministic test rng */
std::mt19937_64 rng(0xC0FFEE);
long long rnd(long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}
}  // namespace

TEST_CASE("fractional part operator") {
    CHECK(frac(Rat(-1, 3)) == Rat(2, 3));
    CHECK(frac(Rat(0)) == Rat(0));
    CHECK(frac(Rat(-2, 3)) == Rat(1, 3));
    CHECK(frac(Rat(7, 3)) == Rat(1, 3));
    for (int i = 0; i < 10000; ++i) {
        Rat q(rnd(-1000000, 1000000), rnd(1, 997));
        Rat f = frac(q);
        CHECK(f + Rat(rfloor(q)) == q);
        CHECK(f >= 0);
        CHECK(f < 1);
    }
}

TEST_CASE("p-adic digits") {
    CHECK(p_adic_digits(0, 5, 2) == std::vector<long long>{0, 0});
    CHECK(p_adic_digits(7, 5, 2) == std::vector<long long>{2, 1});
    CHECK(p_adic_digits(24, 5, 2) == std::vector<long long>{4, 4});
    CHECK_THROWS_AS(p_adic_digits(25, 5, 2), std::domain_error);
    CHECK_THROWS_AS(p_adic_digits(-1, 5, 2), std::domain_error);
    for (long long p : {2, 3, 5, 7})
        for (int ell = 1; ell <= 3; ++ell)
            for (long long k = 0; k < pow_ll(p, ell); ++k)
                CHECK(from_p_adic_digits(p_adic_digits(k, p, ell), p) == k);
}

TEST_CASE("field axioms and Fermat") {
    for (auto [p, e] : std::vector<std::pair<long long, int>>{{2, 1}, {2, 2}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {3, 3}}) {
        Fq F(p, e);
        CHECK(F.q() == pow_ll(p, e));
        for (int trial = 0; trial < 200; ++trial) {
            auto a = rnd(0, F.q() - 1), b = rnd(0, F.q() - 1), c = rnd(0, F.q() - 1);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
        for (long long a = 0; a < F.q(); ++a)
            CHECK(F.pow(a, F.q()) == a);
    }
}

TEST_CASE("zeta has exact order and is deterministic") {
    Fq F(5, 2);  // q = 25
    for (long long n : {1, 2, 3, 4, 6, 8, 12, 24}) {
        auto z = F.zeta(n);
        CHECK(F.pow(z, n) == 1);
        if (n > 1) CHECK(F.mult_order(z) == n);
        CHECK(F.zeta(n) == z);
    }
    CHECK_THROWS(F.zeta(5));
}

TEST_CASE("polynomial divmod and gcd") {
    Fq F(5, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Fq::Elem> ac(rnd(0, 6) + 1), bc(rnd(0, 4) + 1);
        for (auto& x : ac) x = rnd(0, 4);
        for (auto& x : bc) x = rnd(0, 4);
        FqPoly a(&F, ac), b(&F, bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        FqPoly g = FqPoly::gcd(a, b);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}

TEST_CASE("partial fraction expansion round-trips") {
    Fq F(5, 2);
    for (int trial = 0; trial < 100; ++trial) {
        /* random denominator with 1..3 distinct poles */
        std::vector<std::pair<Fq::Elem, int>> factors;
        int npoles = static_cast<int>(rnd(1, 3));
        for (int i = 0; i < npoles; ++i) {
            Fq::Elem gamma = rnd(0, F.q() - 1);
            bool dup = false;
            for (auto& [g, m] : factors) dup |= (g == gamma);
            if (dup) continue;
            factors.push_back({gamma, static_cast<int>(rnd(1, 3))});
        }
        int den_deg = 0;
        for (auto& [g, m] : factors) den_deg += m;
        std::vector<Fq::Elem> nc(rnd(0, den_deg + 2) + 1);
        for (auto& x : nc) x = rnd(0, F.q() - 1);
        FqPoly num(&F, nc);
        auto pf = pf_expand(num, factors);
        /* recombine over the common denominator */
        FqPoly den = FqPoly::constant(&F, 1);
        for (auto& [g, m] : factors) den = den * FqPoly::x_minus(&F, g).pow(m);
        FqPoly acc = pf.poly_part * den;
        for (auto& [gamma, coeffs] : pf.singular) {
            for (size_t j = 1; j <= coeffs.size(); ++j) {
                if (coeffs[j - 1] == 0) continue;
                /* c * den / (x-gamma)^j */
                FqPoly term = FqPoly::constant(&F, coeffs[j - 1]);
                for (auto& [g2, m2] : factors)
                    term = term * FqPoly::x_minus(&F, g2).pow(g2 == gamma ? m2 - static_cast<int>(j) : m2);
                acc = acc + term;
            }
        }
        CHECK(acc == num);
    }
}

TEST_CASE("unipotent block sizes: identity and a single Jordan block") {
    Fq F(5, 1);
    FqMatrix id = FqMatrix::identity(&F, 3);
    auto blocks = unipotent_block_sizes(id, 1);
    CHECK(blocks == std::map<size_t, size_t>{{1, 3}});

    FqMatrix j(&F, 4, 4);
    Fq::Elem c = 3;
    for (size_t i = 0; i < 4; ++i) {
        j.at(i, i) = c;
        if (i + 1 < 4) j.at(i, i + 1) = 1;
    }
    CHECK(unipotent_block_sizes(j, c) == std::map<size_t, size_t>{{4, 1}});
    CHECK(unipotent_block_sizes(j, 1).empty());
}

TEST_CASE("unipotent block sizes survive random conjugation") {
    Fq F(3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        /* random partition with blocks for up to two eigenvalues */
        std::vector<std::pair<Fq::Elem, size_t>> blocks;
        size_t dim = 0;
        int nblocks = static_cast<int>(rnd(1, 4));
        Fq::Elem c1 = rnd(1, F.q() - 1), c2 = rnd(1, F.q() - 1);
        for (int i = 0; i < nblocks; ++i) {
            size_t sz = static_cast<size_t>(rnd(1, 4));
            blocks.push_back({rnd(0, 1) ? c1 : c2, sz});
            dim += sz;
        }
        FqMatrix m(&F, dim, dim);
        size_t pos = 0;
        std::map<Fq::Elem, std::map<size_t, size_t>> expected;
        for (auto& [c, sz] : blocks) {
            for (size_t i = 0; i < sz; ++i) {
                m.at(pos + i, pos + i) = c;
                if (i + 1 < sz) m.at(pos + i, pos + i + 1) = 1;
            }
            expected[c][sz] += 1;
            pos += sz;
        }
        /* random invertible conjugator */
        FqMatrix s(&F, dim, dim);
        do {
            for (size_t i = 0; i < dim; ++i)
                for (size_t jj = 0; jj < dim; ++jj) s.at(i, jj) = rnd(0, F.q() - 1);
        } while (s.rank() != dim);
        /* inverse via solving s * x = e_i */
        FqMatrix sinv(&F, dim, dim);
        for (size_t col = 0; col < dim; ++col) {
            std::vector<Fq::Elem> e(dim, 0);
            e[col] = 1;
            auto x = s.solve(e);
            REQUIRE(x.has_value());
            for (size_t i = 0; i < dim; ++i) sinv.at(i, col) = (*x)[i];
        }
        FqMatrix conj = s * m * sinv;
        for (auto& [c, part] : expected)
            CHECK(unipotent_block_sizes(conj, c) == part);
    }
}

TEST_CASE("rank, nullspace, solve") {
    Fq F(7, 1);
    for (int trial = 0; trial < 100; ++trial) {
        size_t r = static_cast<size_t>(rnd(1, 6)), c = static_cast<size_t>(rnd(1, 6));
        FqMatrix m(&F, r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = rnd(0, 6);
        size_t rk = m.rank();
        auto ns = m.nullspace();
        CHECK(rk + ns.size() == c);
        for (auto& v : ns) {
            for (size_t i = 0; i < r; ++i) {
                Fq::Elem acc = 0;
                for (size_t j = 0; j < c; ++j) acc = F.add(acc, F.mul(m.at(i, j), v[j]));
                CHECK(acc == 0);
            }
        }
        /* consistent system: b = m * x0 */
        std::vector<Fq::Elem> x0(c);
        for (auto& x : x0) x = rnd(0, 6);
        std::vector<Fq::Elem> b(r, 0);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) b[i] = F.add(b[i], F.mul(m.at(i, j), x0[j]));
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        for (size_t i = 0; i < r; ++i) {
            Fq::Elem acc = 0;
            for (size_t j = 0; j < c; ++j) acc = F.add(acc, F.mul(m.at(i, j), (*sol)[j]));
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("smallest field size") {
    int e = 0;
    CHECK(smallest_field_size(5, 1, 2, &e) == 5);
    CHECK(e == 1);
    CHECK(smallest_field_size(5, 4, 5, &e) == 25);
    CHECK(e == 2);
    CHECK(smallest_field_size(2, 3, 5, &e) == 16);
    CHECK(smallest_field_size(3, 4, 5, &e) == 9);
}
