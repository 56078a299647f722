#include "cycdiff/oracle.hpp"

#include "cycdiff/boseck.hpp"
#include "cycdiff/rational.hpp"
#include "cycdiff/weier.hpp"

#include <algorithm>
#include <sstream>

namespace cycdiff {

CurveOracle::CurveOracle(CurveSpec spec)
    : spec_(std::move(spec)), F_(curve_field(spec_)) {
    validate_curve(spec_);
    tower_ = derive_tower(spec_);
    places_ = model_places(spec_);
    genus_ = genus_F(tower_);
    const long long n = spec_.group.n;
    zeta_ = n > 1 ? F_.zeta(n) : 1;
    if (n == 1) u_ = 0;
    else u_ = spec_.group.ell == 1 ? mod_inverse(mod_ll(spec_.group.p, n), n) : 1;
    build_basis();
    build_action();
}

long long CurveOracle::level_dimension(long long lambda, long long k) const {
    auto it = levels_.find({lambda, k});
    return it == levels_.end() ? 0 : static_cast<long long>(it->second.size());
}

namespace {

struct LevelDivisor {
    std::vector<long long> d_finite;  // per finite modeled place
    long long d_inf = 0;
    long long degree() const {
        long long s = d_inf;
        for (long long d : d_finite) s += d;
        return s;
    }
};

}  // namespace

void CurveOracle::build_basis() {
    const long long n = spec_.group.n;
    const long long pl = spec_.group.p_ell();

    std::vector<const PlaceModel*> finite;
    const PlaceModel* infinity = nullptr;
    for (const auto& pm : places_)
        if (pm.at_infinity) infinity = &pm;
        else finite.push_back(&pm);

    /* holomorphy divisors for every level */
    std::map<std::pair<long long, long long>, LevelDivisor> divisors;
    std::vector<long long> max_d(finite.size(), 0);
    for (long long lambda = 0; lambda < n; ++lambda) {
        long long a = lambda;  // alpha_lambda with r_act = 1
        for (long long k = 0; k < pl; ++k) {
            LevelDivisor d;
            d.d_finite.resize(finite.size());
            for (size_t i = 0; i < finite.size(); ++i) {
                const PlaceModel& pm = *finite[i];
                d.d_finite[i] = floor_div_ll(a * pm.v_y + k * pm.v_z + pm.v_dx, pm.e_total);
                max_d[i] = std::max(max_d[i], d.d_finite[i]);
            }
            d.d_inf = floor_div_ll(a * infinity->v_y + infinity->v_dx, infinity->e_total);
            if (d.d_inf >= 0)
                throw InternalError("build_basis: expected a pole bound at infinity");
            divisors[{lambda, k}] = d;
        }
    }

    atoms_.clear();
    std::vector<std::pair<size_t, int>> atom_of;  // (finite index, j)
    for (size_t i = 0; i < finite.size(); ++i)
        for (int j = 1; j <= max_d[i]; ++j) {
            atoms_.push_back({finite[i]->x_value, j});
            atom_of.push_back({i, j});
        }

    elements_.clear();
    levels_.clear();
    for (auto& [key, div] : divisors) {
        auto [lambda, k] = key;
        long long expected = std::max<long long>(0, div.degree() + 1);
        /* atoms admitted at this level */
        std::vector<size_t> admitted;
        for (size_t t = 0; t < atoms_.size(); ++t) {
            auto [i, j] = atom_of[t];
            if (j <= div.d_finite[i]) admitted.push_back(t);
        }
        long long m = -div.d_inf - 1;  // vanishing conditions at infinity
        FqMatrix cond(&F_, static_cast<size_t>(m), admitted.size());
        for (long long row = 1; row <= m; ++row)
            for (size_t c = 0; c < admitted.size(); ++c) {
                const Atom& at = atoms_[admitted[c]];
                if (at.j > row) continue;
                /* coefficient of x^{-row} in (x-gamma)^{-j} */
                long long bin = binom_mod_p(row - 1, at.j - 1, spec_.group.p);
                Fq::Elem v = F_.mul(F_.from_int(bin), F_.pow(at.gamma, row - at.j));
                cond.at(static_cast<size_t>(row - 1), c) = v;
            }
        auto null_basis = cond.nullspace();
        if (static_cast<long long>(null_basis.size()) != expected) {
            std::ostringstream os;
            os << "basis construction failed at (lambda=" << lambda << ", k=" << k
               << "): found " << null_basis.size() << " elements, Riemann-Roch expects "
               << expected;
            throw InternalError(os.str());
        }
        for (const auto& vec : null_basis) {
            Element el;
            el.lambda = lambda;
            el.k = k;
            el.a = lambda;
            el.h.assign(atoms_.size(), 0);
            for (size_t c = 0; c < admitted.size(); ++c) el.h[admitted[c]] = vec[c];
            levels_[{lambda, k}].push_back(elements_.size());
            elements_.push_back(std::move(el));
        }
    }

    if (dimension() != genus_) {
        std::ostringstream os;
        os << "basis construction failed: " << dimension()
           << " holomorphic differentials found, genus is " << genus_;
        throw InternalError(os.str());
    }
}

void CurveOracle::build_action() {
    const size_t dim = elements_.size();
    action_ = FqMatrix(&F_, dim, dim);
    const long long p = spec_.group.p;
    for (const auto& [key, members] : levels_) {
        auto [lambda, j] = key;
        /* elements whose image under g has a z^j component in this level */
        std::vector<size_t> rhs;
        for (const auto& [key2, members2] : levels_) {
            auto [lambda2, k2] = key2;
            if (lambda2 != lambda || k2 < j) continue;
            for (size_t e : members2) rhs.push_back(e);
        }
        if (members.empty()) {
            for (size_t e : rhs) {
                const Element& el = elements_[e];
                if (el.k == j) continue;
                if (binom_mod_p(el.k, j, p) % p != 0)
                    throw InternalError("action image lands outside the basis span");
            }
            continue;
        }
        /* solve B x = h for all right-hand sides at once */
        FqMatrix aug(&F_, atoms_.size(), members.size() + rhs.size());
        for (size_t c = 0; c < members.size(); ++c)
            for (size_t r = 0; r < atoms_.size(); ++r)
                aug.at(r, c) = elements_[members[c]].h[r];
        for (size_t c = 0; c < rhs.size(); ++c)
            for (size_t r = 0; r < atoms_.size(); ++r)
                aug.at(r, members.size() + c) = elements_[rhs[c]].h[r];
        auto pivots = aug.rref();
        if (pivots.size() != members.size())
            throw InternalError("action image lands outside the basis span");
        for (size_t c : pivots)
            if (c >= members.size())
                throw InternalError("action image lands outside the basis span");
        for (size_t c = 0; c < rhs.size(); ++c) {
            const Element& el = elements_[rhs[c]];
            long long bin = binom_mod_p(el.k, j, p);
            if (bin % p == 0) continue;
            Fq::Elem scale = F_.mul(F_.pow(zeta_, mod_ll(u_ * el.a, std::max<long long>(spec_.group.n, 1))),
                                    F_.from_int(bin));
            for (size_t rrow = 0; rrow < pivots.size(); ++rrow) {
                Fq::Elem coord = aug.at(rrow, members.size() + c);
                if (coord == 0) continue;
                action_.at(members[rrow], rhs[c]) =
                    F_.add(action_.at(members[rrow], rhs[c]), F_.mul(scale, coord));
            }
        }
    }
}

std::map<ModuleLabel, long long> CurveOracle::jordan_table() const {
    std::map<ModuleLabel, long long> table;
    const long long n = spec_.group.n;
    size_t total = 0;
    for (long long lambda = 0; lambda < n; ++lambda) {
        Fq::Elem ev = F_.pow(zeta_, lambda);
        auto blocks = unipotent_block_sizes(action_, ev);
        for (auto& [size, count] : blocks) {
            table[ModuleLabel{lambda, static_cast<long long>(size)}] = static_cast<long long>(count);
            total += size * count;
        }
    }
    if (total != elements_.size())
        throw InternalError("jordan_table: action matrix has eigenvalues outside the n-th roots of unity");
    return table;
}

bool CurveOracle::has_totally_ramified_place() const {
    for (const auto& pm : places_)
        if (pm.e_total == spec_.group.order()) return true;
    return false;
}

const PlaceModel& CurveOracle::totally_ramified_place() const {
    for (const auto& pm : places_)
        if (pm.e_total == spec_.group.order()) return pm;
    throw ValidationError("curve has no totally ramified place");
}

std::pair<long long, Fq::Elem> CurveOracle::local_valuation(const std::vector<Fq::Elem>& h,
                                                            const PlaceModel& pm) const {
    const long long p = spec_.group.p;
    if (!pm.at_infinity) {
        int deepest = 0;
        for (size_t t = 0; t < atoms_.size(); ++t)
            if (h[t] != 0 && atoms_[t].gamma == pm.x_value)
                deepest = std::max(deepest, atoms_[t].j);
        if (deepest > 0) {
            for (size_t t = 0; t < atoms_.size(); ++t)
                if (h[t] != 0 && atoms_[t].gamma == pm.x_value && atoms_[t].j == deepest)
                    return {-deepest, h[t]};
        }
        /* regular at x_value: Taylor coefficients until one is nonzero */
        for (long long i = 0;; ++i) {
            Fq::Elem ti = 0;
            for (size_t t = 0; t < atoms_.size(); ++t) {
                if (h[t] == 0) continue;
                const Atom& at = atoms_[t];
                Fq::Elem d = F_.sub(pm.x_value, at.gamma);
                /* (x-gamma)^{-j} = sum_i (-1)^i C(j+i-1,i) d^{-j-i} (x-x0)^i */
                Fq::Elem c = F_.mul(h[t], F_.from_int(binom_mod_p(at.j + i - 1, i, p)));
                c = F_.mul(c, F_.pow(d, -(at.j + i)));
                if (i % 2 == 1) c = F_.neg(c);
                ti = F_.add(ti, c);
            }
            if (ti != 0) return {i, ti};
            if (i > 4 * genus_ + 8)
                throw InternalError("local_valuation: expansion did not terminate (zero function?)");
        }
    }
    /* at infinity, in w = 1/x: (x-gamma)^{-j} = sum_s C(s-1,j-1) gamma^{s-j} w^s */
    for (long long s = 1;; ++s) {
        Fq::Elem cs = 0;
        for (size_t t = 0; t < atoms_.size(); ++t) {
            if (h[t] == 0) continue;
            const Atom& at = atoms_[t];
            if (at.j > s) continue;
            Fq::Elem c = F_.mul(h[t], F_.from_int(binom_mod_p(s - 1, at.j - 1, p)));
            c = F_.mul(c, F_.pow(at.gamma, s - at.j));
            cs = F_.add(cs, c);
        }
        if (cs != 0) return {s, cs};
        if (s > 4 * genus_ + 8)
            throw InternalError("local_valuation: expansion did not terminate (zero function?)");
    }
}

long long CurveOracle::element_valuation(const Element& el, const PlaceModel& pm) const {
    auto [v_h, lead] = local_valuation(el.h, pm);
    (void)lead;
    return pm.e_total * v_h + el.a * pm.v_y + el.k * pm.v_z + pm.v_dx;
}

std::vector<long long> CurveOracle::gaps() const {
    const PlaceModel& pm = totally_ramified_place();
    struct Live {
        long long lambda, k, a;
        std::vector<Fq::Elem> h;
        long long v;
        Fq::Elem lead;
    };
    std::vector<Live> live;
    for (const auto& el : elements_) {
        auto [vh, lead] = local_valuation(el.h, pm);
        live.push_back({el.lambda, el.k, el.a, el.h,
                        pm.e_total * vh + el.a * pm.v_y + el.k * pm.v_z + pm.v_dx, lead});
    }
    /* triangularize by valuation at pm: equal valuations force equal (a,k)
     * at a totally ramified place, so combinations stay monomial */
    while (true) {
        std::map<long long, size_t> seen;
        bool changed = false;
        for (size_t i = 0; i < live.size(); ++i) {
            auto [it, inserted] = seen.emplace(live[i].v, i);
            if (inserted) continue;
            Live& a = live[i];
            Live& b = live[it->second];
            if (a.lambda != b.lambda || a.k != b.k)
                throw InternalError("gaps: equal valuations across distinct (lambda,k) groups");
            Fq::Elem factor = F_.div(a.lead, b.lead);
            for (size_t t = 0; t < a.h.size(); ++t)
                a.h[t] = F_.sub(a.h[t], F_.mul(factor, b.h[t]));
            long long old_v = a.v;
            auto [vh, lead] = local_valuation(a.h, pm);
            a.v = pm.e_total * vh + a.a * pm.v_y + a.k * pm.v_z + pm.v_dx;
            a.lead = lead;
            if (a.v <= old_v || a.v > 2 * genus_ - 2)
                throw InternalError("gaps: elimination stalled");
            changed = true;
            break;
        }
        if (!changed) break;
    }
    std::vector<long long> out;
    for (const auto& l : live) out.push_back(l.v + 1);
    std::sort(out.begin(), out.end());
    if (static_cast<long long>(out.size()) != genus_ ||
        std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InternalError("gaps: expected g distinct gap values");
    return out;
}

std::string CurveOracle::element_to_string(const Element& el) const {
    std::ostringstream os;
    bool first = true;
    os << "(";
    for (size_t t = 0; t < atoms_.size(); ++t) {
        if (el.h[t] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (el.h[t] != 1) os << el.h[t] << "*";
        os << "(x-" << atoms_[t].gamma << ")^-" << atoms_[t].j;
    }
    if (first) os << "0";
    os << ")";
    if (el.a > 0) os << " y^" << el.a;
    if (el.k > 0) os << " z^" << el.k;
    os << " dx";
    return os.str();
}

namespace {

std::string label_str(const ModuleLabel& l) {
    return "(" + std::to_string(l.lambda) + "," + std::to_string(l.k) + ")";
}

}  // namespace

std::string OracleReport::to_text() const {
    std::ostringstream os;
    os << "curve " << std::hex << spec_hash << std::dec << "\n";
    os << (genus_ok ? "PASS" : "FAIL") << " genus: formula " << genus_formula
       << ", oracle basis " << dim_basis << "\n";
    os << (d_ok ? "PASS" : "FAIL") << " decomposition:";
    for (const auto& [l, d] : d_oracle) os << " " << label_str(l) << ":" << d;
    if (d_oracle.empty()) os << " (empty)";
    os << "\n";
    if (gaps_applicable) {
        os << (gap_classes_ok ? "PASS" : "FAIL") << " gap classes";
        if (full_gaps_checked) os << "; " << (full_gaps_ok ? "PASS" : "FAIL") << " full gap list";
        os << ": gaps";
        for (long long g : oracle_gaps) os << " " << g;
        os << "\n";
    } else {
        os << "SKIP gap comparison (no totally ramified place)\n";
    }
    for (const auto& f : failures) os << "  " << f << "\n";
    return os.str();
}

OracleReport verify_curve(const CurveSpec& spec) {
    return verify_curve(spec, derive_tower(spec));
}

OracleReport verify_curve(const CurveSpec& spec, const TowerData& tower) {
    OracleReport rep;
    rep.spec_hash = curve_hash(spec);
    CurveOracle oracle(spec);
    rep.dim_basis = oracle.dimension();
    rep.d_oracle = oracle.jordan_table();

    try {
        rep.genus_formula = genus_F(tower);
        rep.genus_ok = rep.genus_formula == rep.dim_basis;
        if (!rep.genus_ok)
            rep.failures.push_back("genus: formula gives " + std::to_string(rep.genus_formula) +
                                   ", oracle basis has " + std::to_string(rep.dim_basis));

        BoseckContext ctx(tower);
        rep.d_formula = decompose(ctx).mult;
        rep.d_ok = rep.d_formula == rep.d_oracle;
        if (!rep.d_ok) {
            std::map<ModuleLabel, std::pair<long long, long long>> all;
            for (auto& [l, d] : rep.d_formula) all[l].first = d;
            for (auto& [l, d] : rep.d_oracle) all[l].second = d;
            for (auto& [l, pair] : all)
                if (pair.first != pair.second)
                    rep.failures.push_back("d" + label_str(l) + ": formula " +
                                           std::to_string(pair.first) + ", oracle " +
                                           std::to_string(pair.second));
        }

        if (oracle.has_totally_ramified_place()) {
            rep.gaps_applicable = true;
            rep.oracle_gaps = oracle.gaps();
            const std::string& id = oracle.totally_ramified_place().id;
            size_t branch_index = tower.branch_points.size();
            for (size_t i = 0; i < tower.branch_points.size(); ++i)
                if (tower.branch_points[i].id == id) branch_index = i;
            if (branch_index == tower.branch_points.size())
                throw ValidationError("tower has no branch point matching " + id);
            GapProfile profile = gap_classes(ctx, branch_index);
            const long long n = tower.group.n, pl = tower.group.p_ell();
            std::map<std::pair<long long, long long>, long long> oracle_classes;
            for (long long g : rep.oracle_gaps)
                oracle_classes[{mod_ll(g, n), mod_ll(g, pl)}] += 1;
            std::map<std::pair<long long, long long>, long long> formula_classes;
            for (auto& [cls, count] : profile.classes)
                if (count != 0) formula_classes[cls] = count;
            rep.gap_classes_ok = formula_classes == oracle_classes;
            if (!rep.gap_classes_ok)
                for (auto& [cls, count] : formula_classes)
                    if (oracle_classes[cls] != count)
                        rep.failures.push_back(
                            "gap class (" + std::to_string(cls.first) + "," +
                            std::to_string(cls.second) + "): formula " + std::to_string(count) +
                            ", oracle " + std::to_string(oracle_classes[cls]));
            if (genus_FP(tower) == 0) {
                rep.full_gaps_checked = true;
                auto fg = full_gaps(ctx, branch_index);
                rep.full_gaps_ok = fg == rep.oracle_gaps;
                if (!rep.full_gaps_ok)
                    rep.failures.push_back("full gap lists differ");
            }
        }
    } catch (const std::exception& e) {
        rep.genus_ok = rep.d_ok = rep.gap_classes_ok = false;
        rep.failures.push_back(std::string("formula engine raised: ") + e.what());
    }
    return rep;
}

}  // namespace cycdiff
