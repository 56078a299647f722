#include "cycdiff/sweep.hpp"

#include "cycdiff/rational.hpp"

#include <algorithm>
#include <set>

namespace cycdiff {

namespace {

std::vector<long long> coprime_to(const std::vector<long long>& ns, long long p) {
    std::vector<long long> out;
    for (long long n : ns)
        if (gcd_ll(n, p) == 1) out.push_back(n);
    return out;
}

long long random_unit(SweepRng& rng, long long n) {
    if (n == 1) return 0;
    while (true) {
        long long u = 1 + rng.uniform(n - 1);
        if (gcd_ll(u, n) == 1) return u;
    }
}

long long random_prime_to(SweepRng& rng, long long p, long long lo, long long hi) {
    while (true) {
        long long v = lo + rng.uniform(hi - lo + 1);
        if (v % p != 0) return v;
    }
}

/* Totally ramified wild data over a point of tame index e': upper breaks
 * u_1 < ... < u_ell of a cyclic p^ell extension of the base, converted to
 * lower breaks, scaled by e', with delta summed over the break filtration. */
WildData random_wild_data(SweepRng& rng, long long p, int ell, long long e_prime) {
    std::vector<long long> upper(ell), lower(ell);
    upper[0] = random_prime_to(rng, p, 1, 6);
    lower[0] = upper[0];
    for (int j = 1; j < ell; ++j) {
        if (rng.uniform(2) == 0) upper[j] = p * upper[j - 1];
        else upper[j] = p * upper[j - 1] + random_prime_to(rng, p, 1, 5);
        lower[j] = lower[j - 1] + pow_ll(p, j) * (upper[j] - upper[j - 1]);
    }
    WildData w;
    w.epsilon = ell;
    w.jumps.resize(ell);
    for (int j = 0; j < ell; ++j) w.jumps[j] = e_prime * lower[j];
    w.delta = (w.jumps[0] + 1) * (pow_ll(p, ell) - 1);
    for (int j = 1; j < ell; ++j)
        w.delta += (w.jumps[j] - w.jumps[j - 1]) * (pow_ll(p, ell - j) - 1);
    return w;
}

/* Tame exponents phi_1..phi_t with sum divisible by n; the first one is a
 * unit mod n so genus-0 bases stay connected.  Empty when no t-point
 * configuration exists (e.g. n = 2 with odd t). */
std::vector<long long> random_phis(SweepRng& rng, long long n, long long t) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long long> phis;
        phis.push_back(random_unit(rng, n));
        for (long long i = 1; i + 1 < t; ++i) phis.push_back(1 + rng.uniform(n - 1));
        long long sum = 0;
        for (long long f : phis) sum += f;
        long long last = mod_ll(-sum, n);
        if (last == 0) continue;
        phis.push_back(last);
        return phis;
    }
    return {};
}

}  // namespace

TowerData random_tower(SweepRng& rng, const std::vector<long long>& ps,
                       const std::vector<long long>& ns, int max_ell) {
    while (true) {
        long long p = rng.pick(ps);
        auto n_ok = coprime_to(ns, p);
        if (n_ok.empty()) continue;
        long long n = rng.pick(n_ok);
        int ell = max_ell == 0 ? 0 : static_cast<int>(rng.uniform(max_ell + 1));

        TowerData t;
        t.group = {p, ell, n, n > 1 ? random_unit(rng, n) : 1};
        bool unramified_wild = ell > 0 && rng.uniform(5) == 0;
        t.base_genus = unramified_wild ? 1 + rng.uniform(3) : rng.uniform(4);

        std::vector<BranchPoint> tame;
        if (n > 1) {
            long long count = 2 + rng.uniform(2);
            if (t.base_genus > 0 && rng.uniform(4) == 0) count = 0;
            if (count > 0) {
                auto phis = random_phis(rng, n, count);
                if (phis.empty()) continue;  // no t-point configuration mod n
                for (size_t i = 0; i < phis.size(); ++i)
                    tame.push_back({"Q" + std::to_string(i), phis[i], {}});
            }
        }

        if (ell > 0 && !unramified_wild) {
            long long orbits = 1 + rng.uniform(2);
            for (long long w = 0; w < orbits; ++w) {
                /* attach to a tame point without wild data, or stand alone */
                BranchPoint* host = nullptr;
                if (!tame.empty() && rng.uniform(2) == 0)
                    for (auto& bp : tame)
                        if (!bp.wild) { host = &bp; break; }
                if (host) {
                    host->wild = random_wild_data(rng, p, ell,
                                                  t.group.n / gcd_ll(t.group.n, host->tame_phi));
                } else {
                    BranchPoint bp{"P" + std::to_string(w), 0,
                                   random_wild_data(rng, p, ell, 1)};
                    tame.push_back(bp);
                }
            }
        }
        if (ell > 0 && unramified_wild)
            t.genus_ErT = pow_ll(p, ell) * (t.base_genus - 1) + 1;
        t.branch_points = tame;
        if (t.group.order() == 1 && t.base_genus == 0) continue;  // nothing to decompose
        if (!validate(t).ok()) continue;
        return t;
    }
}

CurveSpec random_curve(SweepRng& rng, const CurveSweepParams& params) {
    while (true) {
        long long p = rng.pick(params.ps);
        auto n_ok = coprime_to(params.ns, p);
        if (n_ok.empty()) continue;
        long long n = rng.pick(n_ok);
        int ell;
        if (n == 1) ell = rng.uniform(8) == 0 ? 0 : 1;
        else ell = rng.uniform(4) == 0 ? 0 : 1;
        if (n == 1 && ell == 0) {
            CurveSpec triv;
            triv.group = {p, 0, 1, 1};
            int e = 0;
            triv.q = smallest_field_size(p, 1, 3, &e);
            return triv;
        }

        long long values = 1 + rng.uniform(params.max_x_values);
        int e = 0;
        long long q = smallest_field_size(p, n, values + 2, &e);

        std::set<Fq::Elem> used;
        auto fresh_value = [&]() {
            while (true) {
                Fq::Elem x = rng.uniform(q);
                if (used.insert(x).second) return x;
            }
        };

        CurveSpec spec;
        spec.group = {p, ell, n, 1};
        spec.q = q;

        /* designated totally ramified place: tame index n (phi a unit),
         * plus a wild pole when ell = 1 */
        Fq::Elem x0 = fresh_value();
        if (n > 1) spec.b_factored.push_back({x0, random_unit(rng, n)});
        if (ell == 1)
            spec.f_partial.push_back({x0, random_prime_to(rng, p, 1, params.max_pole_order),
                                      1 + rng.uniform(q - 1)});

        for (long long i = 1; i < values; ++i) {
            Fq::Elem x = fresh_value();
            int role = static_cast<int>(rng.uniform(3));
            bool tame = n > 1 && role != 1;
            bool wild = ell == 1 && role != 0;
            if (!tame && !wild) continue;
            if (tame) spec.b_factored.push_back({x, 1 + rng.uniform(n - 1)});
            if (wild) {
                /* measured order e' * m must stay prime to p: automatic */
                spec.f_partial.push_back({x, random_prime_to(rng, p, 1, params.max_pole_order),
                                          1 + rng.uniform(q - 1)});
            }
        }
        try {
            validate_curve(spec);
        } catch (const ValidationError&) {
            continue;
        }
        return spec;
    }
}

SweepResult run_sweep(unsigned long long seed, long long count, const CurveSweepParams& params) {
    SweepRng rng(seed);
    SweepResult out;
    for (long long i = 0; i < count; ++i) {
        CurveSpec spec = random_curve(rng, params);
        OracleReport rep = verify_curve(spec);
        if (rep.pass()) ++out.passed;
        else ++out.failed;
        out.reports.push_back(std::move(rep));
    }
    return out;
}

}  // namespace cycdiff
