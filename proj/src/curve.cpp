#include "cycdiff/curve.hpp"

#include "cycdiff/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cycdiff {

long long phi_infinity(const CurveSpec& spec) {
    long long sum = 0;
    for (const auto& r : spec.b_factored) sum += r.phi;
    return mod_ll(-sum, spec.group.n);
}

Fq curve_field(const CurveSpec& spec) {
    long long q = spec.q, p = spec.group.p;
    int e = 0;
    while (q > 1 && q % p == 0) { q /= p; ++e; }
    if (q != 1 || e < 1)
        throw ValidationError("curve.q: not a power of the group characteristic");
    return Fq(p, e);
}

void validate_curve(const CurveSpec& spec) {
    const GroupSpec& g = spec.group;
    if (!is_prime_ll(g.p)) throw ValidationError("curve.group.p: not prime");
    if (g.ell != 0 && g.ell != 1)
        throw ValidationError("curve.group.ell: explicit curves support ell in {0,1} only");
    if (g.n < 1 || (g.n > 1 && gcd_ll(g.n, g.p) != 1))
        throw ValidationError("curve.group: need n >= 1 with gcd(n,p) = 1");
    if (g.n > 1 && g.kummer_exponent != 1)
        throw ValidationError("curve.group.kummer_exponent: explicit curves fix r_act = 1");
    curve_field(spec);
    if (g.n > 1 && (spec.q - 1) % g.n != 0)
        throw ValidationError("curve.q: n does not divide q-1, no n-th root of unity");

    if (g.n == 1 && !spec.b_factored.empty())
        throw ValidationError("curve.b_roots: must be empty when n = 1");
    std::set<Fq::Elem> betas;
    for (const auto& r : spec.b_factored) {
        if (r.beta < 0 || r.beta >= spec.q)
            throw ValidationError("curve.b_roots: root outside the field");
        if (!betas.insert(r.beta).second)
            throw ValidationError("curve.b_roots: repeated root");
        if (r.phi < 1 || r.phi >= g.n)
            throw ValidationError("curve.b_roots: phi out of range [1, n)");
    }
    if (g.n > 1) {
        if (spec.b_factored.empty())
            throw ValidationError("curve.b_roots: n > 1 needs at least one branch point");
        long long d = g.n;
        for (const auto& r : spec.b_factored) d = gcd_ll(d, r.phi);
        if (d != 1)
            throw ValidationError("curve.b_roots: gcd(n, phi_i) > 1, the Kummer cover is disconnected");
    }

    if (g.ell == 0 && !spec.f_partial.empty())
        throw ValidationError("curve.f_terms: must be empty when ell = 0");
    if (g.ell == 1 && spec.f_partial.empty())
        throw ValidationError("curve.f_terms: ell = 1 needs at least one pole");
    std::set<Fq::Elem> alphas;
    for (const auto& t : spec.f_partial) {
        if (t.alpha < 0 || t.alpha >= spec.q)
            throw ValidationError("curve.f_terms: pole outside the field");
        if (!alphas.insert(t.alpha).second)
            throw ValidationError("curve.f_terms: repeated pole");
        if (t.m < 1) throw ValidationError("curve.f_terms: pole order must be >= 1");
        if (t.m % g.p == 0)
            throw ValidationError("curve.f_terms: pole order divisible by p, "
                                  "not in Artin-Schreier standard form");
        if (t.c <= 0 || t.c >= spec.q)
            throw ValidationError("curve.f_terms: coefficient must be a nonzero field element");
    }
}

namespace {

struct XValue {
    bool at_infinity = false;
    Fq::Elem x = 0;
    long long phi = 0;   // tame exponent (phi_infinity at infinity)
    long long m = 0;     // F^G pole order of f (0 if none)
};

std::vector<XValue> collect_x_values(const CurveSpec& spec) {
    std::map<Fq::Elem, XValue> finite;
    for (const auto& r : spec.b_factored) {
        XValue v; v.x = r.beta; v.phi = r.phi;
        finite[r.beta] = v;
    }
    for (const auto& t : spec.f_partial) {
        auto it = finite.find(t.alpha);
        if (it == finite.end()) {
            XValue v; v.x = t.alpha; v.m = t.m;
            finite[t.alpha] = v;
        } else {
            it->second.m = t.m;
        }
    }
    std::vector<XValue> out;
    for (auto& [x, v] : finite) out.push_back(v);
    long long phi_inf = phi_infinity(spec);
    if (phi_inf != 0) {
        XValue v; v.at_infinity = true; v.phi = phi_inf;
        out.push_back(v);
    }
    return out;
}

std::string x_id(const XValue& v) {
    return v.at_infinity ? "x=inf" : "x=" + std::to_string(v.x);
}

}  // namespace

TowerData derive_tower(const CurveSpec& spec) {
    validate_curve(spec);
    const GroupSpec& g = spec.group;
    TowerData tower;
    tower.group = {g.p, g.ell, g.n, 1};
    tower.base_genus = 0;
    for (const XValue& v : collect_x_values(spec)) {
        BranchPoint bp;
        bp.id = x_id(v);
        bp.tame_phi = v.phi;
        if (v.m > 0) {
            long long ep = v.phi > 0 ? g.n / gcd_ll(g.n, v.phi) : 1;
            long long M = ep * v.m;
            if (M % g.p == 0)
                throw ValidationError("pole order of f at " + bp.id +
                                      " measured in F^P is divisible by p, "
                                      "not in Artin-Schreier standard form");
            bp.wild = WildData{{M}, 1, WildData::delta_for_single_jump(M, g.p)};
        }
        tower.branch_points.push_back(bp);
    }
    return tower;
}

std::vector<PlaceModel> model_places(const CurveSpec& spec) {
    validate_curve(spec);
    const GroupSpec& g = spec.group;
    const long long n = g.n, npl = g.order();
    std::vector<XValue> xvals = collect_x_values(spec);
    bool has_infinity = false;
    for (auto& v : xvals) has_infinity |= v.at_infinity;
    if (!has_infinity) {
        XValue v; v.at_infinity = true;
        xvals.push_back(v);  // always modeled: div(dx) has its -2 there
    }

    long long sum_phi = 0;
    for (const auto& r : spec.b_factored) sum_phi += r.phi;

    std::vector<PlaceModel> out;
    for (const XValue& v : xvals) {
        PlaceModel pm;
        pm.id = x_id(v);
        pm.at_infinity = v.at_infinity;
        pm.x_value = v.x;
        pm.tame_phi = v.phi;
        pm.np_ell = npl;
        pm.e_tame = v.phi > 0 ? n / gcd_ll(n, v.phi) : 1;
        pm.wild = v.m > 0;
        pm.e_wild = pm.wild ? g.p : 1;
        pm.e_total = pm.e_tame * pm.e_wild;
        /* v_P(y) = e_total * v_x(b) / n */
        long long vb = v.at_infinity ? -sum_phi : v.phi;
        pm.v_y = n > 1 ? pm.e_total * vb / n : 0;
        if (pm.wild) {
            pm.jump_M = pm.e_tame * v.m;
            pm.delta = WildData::delta_for_single_jump(pm.jump_M, g.p);
            pm.v_z = -pm.jump_M;
        }
        pm.v_dx = pm.e_wild * (pm.e_tame - 1) + pm.delta + (v.at_infinity ? -2 * pm.e_total : 0);
        out.push_back(pm);
    }

    /* deg div(dx) must be 2g_F - 2 */
    long long deg_dx = 0;
    for (const auto& pm : out) deg_dx += pm.places_degree() * pm.v_dx;
    long long g_F = genus_F(derive_tower(spec));
    if (deg_dx != 2 * g_F - 2)
        throw InternalError("model_places: deg div(dx) = " + std::to_string(deg_dx) +
                            " but 2g-2 = " + std::to_string(2 * g_F - 2));
    return out;
}

unsigned long long curve_hash(const CurveSpec& spec) {
    unsigned long long h = 1469598103934665603ULL;
    auto mix = [&h](long long v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (static_cast<unsigned long long>(v) >> (i * 8)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(spec.group.p); mix(spec.group.ell); mix(spec.group.n); mix(spec.q);
    for (const auto& r : spec.b_factored) { mix(r.beta); mix(r.phi); }
    mix(-1);
    for (const auto& t : spec.f_partial) { mix(t.alpha); mix(t.m); mix(t.c); }
    return h;
}

}  // namespace cycdiff
