#include "cycdiff/boseck.hpp"

#include <sstream>

namespace cycdiff {

namespace {
long long check_nonneg(long long gamma, long long k, long long lambda) {
    if (gamma < 0) {
        std::ostringstream os;
        os << "Gamma_{" << k << "," << lambda << "} = " << gamma
           << " is negative: tower data is not realizable";
        throw ValidationError(os.str());
    }
    return gamma;
}
}  // namespace

BoseckContext::BoseckContext(TowerData tower) : tower_(std::move(tower)) {
    require_valid(tower_);
    genera_ = all_genera(tower_);
    r_ = cycdiff::wild_defect(tower_);
    for (size_t i = 0; i < tower_.branch_points.size(); ++i)
        if (tower_.branch_points[i].is_wild()) wild_orbits_.push_back(i);

    const long long n = tower_.group.n;
    long long r_inv = mod_inverse(mod_ll(tower_.group.kummer_exponent, n), n);
    alpha_.resize(n);
    for (long long lambda = 0; lambda < n; ++lambda)
        alpha_[lambda] = mod_ll(lambda * r_inv, n);

    const long long pl = p_ell();
    nu_.assign(wild_orbits_.size(), std::vector<long long>(pl, 0));
    for (size_t m = 0; m < wild_orbits_.size(); ++m)
        for (long long k = 0; k < pl; ++k)
            nu_[m][k] = nu(m, k);
}

long long BoseckContext::alpha(long long lambda) const {
    return alpha_.at(mod_ll(lambda, tower_.group.n));
}

long long BoseckContext::w_valuation(size_t orbit_index, long long k) const {
    const BranchPoint& bp = tower_.branch_points.at(wild_orbits_.at(orbit_index));
    const GroupSpec& g = tower_.group;
    auto digits = p_adic_digits(k, g.p, g.ell);
    long long v = 0;
    long long weight = pow_ll(g.p, g.ell - 1);  // p^(ell-j) for j = 1
    for (int j = 0; j < g.ell; ++j) {
        v -= digits[j] * bp.wild->jumps[j] * weight;
        weight /= g.p;
    }
    return v;
}

long long BoseckContext::shifted_valuation(size_t orbit_index, long long k) const {
    const BranchPoint& bp = tower_.branch_points.at(wild_orbits_.at(orbit_index));
    return bp.wild->delta + w_valuation(orbit_index, k);
}

long long BoseckContext::nu(size_t orbit_index, long long k) const {
    const BranchPoint& bp = tower_.branch_points.at(wild_orbits_.at(orbit_index));
    long long e_mu = wild_e(tower_, bp);
    long long value = floor_div_ll(shifted_valuation(orbit_index, k), e_mu);
    if (value < 0) {
        std::ostringstream os;
        os << "inconsistent wild data: nu_{" << bp.id << "," << k << "} = " << value << " < 0";
        throw ValidationError(os.str());
    }
    return value;
}

bool BoseckContext::nu_zeroed(long long k) const {
    return k >= p_ell() - pow_ll(tower_.group.p, r_);
}

long long BoseckContext::gamma_bar(long long lambda) const {
    long long a = alpha(lambda);
    Rat total = 0;
    for (const auto& bp : tower_.branch_points) {
        if (!bp.is_tame()) continue;
        long long ep = ramification_e_prime(tower_, bp);
        total += frac(Rat(-a * reduced_phi(tower_, bp), ep));
    }
    if (!is_integer(total))
        throw InternalError("gamma_bar: tame sum is not an integer");
    return static_cast<long long>(rfloor(total));
}

long long BoseckContext::gamma(long long k, long long lambda) const {
    const long long pl = p_ell();
    if (k < 0 || k > pl)
        throw std::domain_error("gamma: k out of range [0, p^ell]");
    long long total = gamma_bar(lambda);
    if (nu_zeroed(k)) return check_nonneg(total, k, lambda);
    long long a = alpha(lambda);
    for (size_t m = 0; m < wild_orbits_.size(); ++m) {
        const BranchPoint& bp = tower_.branch_points[wild_orbits_[m]];
        long long nu_mk = nu_[m][k];
        if (bp.is_tame()) {
            long long ep = ramification_e_prime(tower_, bp);
            Rat inner = frac(Rat(a * reduced_phi(tower_, bp) - 1, ep)) + Rat(nu_mk, ep);
            total += static_cast<long long>(rfloor(inner));
        } else {
            total += nu_mk;
        }
    }
    return check_nonneg(total, k, lambda);
}

}  // namespace cycdiff
