/* Brute-force verification pipeline for explicit covers: build a basis of
 * holomorphic differentials from raw valuation data, compute the matrix of
 * the group generator on it, read off the Jordan structure, and extract
 * the Weierstrass gaps at a totally ramified place.  Everything here works
 * from places and valuations only; none of the closed-form invariants
 * enter, so agreement with the decomposition engine is meaningful.
 *
 * Basis elements are monomial differentials h(x) y^a z^k dx with a square-
 * free-denominator rational h, one group of elements per pair (a,k) with
 * a = alpha_lambda.  The generator acts by y -> zeta^u y (u the inverse of
 * p^ell mod n, so that tau = g^(p^ell) multiplies y by zeta exactly) and
 * z -> z + 1.
 */

#pragma once

#include "cycdiff/curve.hpp"
#include "cycdiff/decomp.hpp"
#include "cycdiff/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace cycdiff {

class CurveOracle {
public:
    explicit CurveOracle(CurveSpec spec);

    const CurveSpec& spec() const { return spec_; }
    const Fq& field() const { return F_; }
    const TowerData& tower() const { return tower_; }
    const std::vector<PlaceModel>& places() const { return places_; }
    long long genus() const { return genus_; }

    /* partial fraction atom (x - gamma)^(-j) */
    struct Atom {
        Fq::Elem gamma;
        int j;
    };
    struct Element {
        long long lambda, k, a;
        std::vector<Fq::Elem> h;  // coordinates over atoms()
    };

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Element>& elements() const { return elements_; }
    long long dimension() const { return static_cast<long long>(elements_.size()); }
    long long level_dimension(long long lambda, long long k) const;

    /* h as a human-readable rational function (for reports/tests) */
    std::string element_to_string(const Element& el) const;

    const FqMatrix& action_matrix() const { return action_; }

    /* d_oracle(lambda,k) from the Jordan structure of the action matrix */
    std::map<ModuleLabel, long long> jordan_table() const;

    bool has_totally_ramified_place() const;
    const PlaceModel& totally_ramified_place() const;

    /* Weierstrass gaps at the designated totally ramified place */
    std::vector<long long> gaps() const;

    /* valuation of a basis element at a modeled place */
    long long element_valuation(const Element& el, const PlaceModel& pm) const;

private:
    CurveSpec spec_;
    Fq F_;
    TowerData tower_;
    std::vector<PlaceModel> places_;
    long long genus_;
    Fq::Elem zeta_;   // primitive n-th root of unity (1 when n = 1)
    long long u_;     // g multiplies y by zeta^u
    std::vector<Atom> atoms_;
    std::vector<Element> elements_;
    std::map<std::pair<long long, long long>, std::vector<size_t>> levels_;
    FqMatrix action_;

    void build_basis();
    void build_action();
    /* local valuation and leading coefficient of the rational function
     * with pf coordinates h at a modeled place */
    std::pair<long long, Fq::Elem> local_valuation(const std::vector<Fq::Elem>& h,
                                                   const PlaceModel& pm) const;
};

struct OracleReport {
    unsigned long long spec_hash = 0;
    long long genus_formula = 0;
    long long dim_basis = 0;
    bool genus_ok = false;
    std::map<ModuleLabel, long long> d_formula;
    std::map<ModuleLabel, long long> d_oracle;
    bool d_ok = false;
    bool gaps_applicable = false;
    bool gap_classes_ok = true;
    bool full_gaps_checked = false;
    bool full_gaps_ok = true;
    std::vector<long long> oracle_gaps;
    std::vector<std::string> failures;

    bool pass() const { return genus_ok && d_ok && gap_classes_ok && full_gaps_ok; }
    std::string to_text() const;
};

/* Runs the whole comparison.  The tower the formulas use is derived from
 * the curve unless an explicit override is supplied (the override is how
 * corrupted ramification data is exercised end to end). */
OracleReport verify_curve(const CurveSpec& spec);
OracleReport verify_curve(const CurveSpec& spec, const TowerData& tower);

}  // namespace cycdiff
