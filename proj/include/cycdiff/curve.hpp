/* Explicit cyclic covers of the projective line over F_q:
 *
 *   Kummer layer        y^n = b(x),  b = prod (x - beta_i)^{phi_i}
 *   Artin-Schreier layer z^p - z = f(x),  f = sum c_i (x - alpha_i)^{-m_i}
 *
 * for groups of order n * p^ell with ell in {0,1}.  f is a proper
 * partial-fraction sum, so the infinite place never ramifies wildly; it
 * picks up tame ramification exactly when sum phi_i is not divisible by
 * n (phi_infinity = -sum phi_i mod n).
 *
 * Field elements are encoded as integers in [0,q) (see Fq).
 */

#pragma once

#include "cycdiff/fq.hpp"
#include "cycdiff/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cycdiff {

struct CurveSpec {
    GroupSpec group;  // ell in {0,1}; kummer_exponent must be 1
    long long q = 0;  // p^e with n | q-1

    struct BRoot {
        Fq::Elem beta;
        long long phi;  // in [1, n)
    };
    std::vector<BRoot> b_factored;

    struct FTerm {
        Fq::Elem alpha;
        long long m;  // pole order in F^G, >= 1, prime to p
        Fq::Elem c;   // nonzero coefficient
    };
    std::vector<FTerm> f_partial;
};

void validate_curve(const CurveSpec& spec);  // throws ValidationError

/* phi at infinity: (-sum phi_i) mod n. */
long long phi_infinity(const CurveSpec& spec);

Fq curve_field(const CurveSpec& spec);

/* The ramification tower the curve realizes.  Branch ids are "x=<enc>"
 * for finite points (encoded field element) and "x=inf".  Wild orbits
 * carry the F^P-measured jump M = e' * m and delta = (M+1)(p-1). */
TowerData derive_tower(const CurveSpec& spec);

unsigned long long curve_hash(const CurveSpec& spec);

/* Valuation data at the places of F over one x-value.  All places over a
 * given x-value share e, v(y) and v(dx); v(z) is the minimum over those
 * places (exact at wildly ramified values, 0 elsewhere). */
struct PlaceModel {
    std::string id;
    bool at_infinity = false;
    Fq::Elem x_value = 0;
    long long tame_phi = 0;   // phi of this x-value (phi_infinity at infinity)
    long long e_tame = 1;     // e' = n/(n,phi)
    long long e_wild = 1;     // p if f has a pole here (ell = 1), else 1
    long long e_total = 1;
    bool wild = false;
    long long jump_M = 0;     // F^P-measured pole order of f
    long long delta = 0;      // (M+1)(p-1)
    long long v_y = 0;        // v_P(y); 0 when n = 1
    long long v_z = 0;        // min over P of v_P(z); -M at wild values
    long long v_dx = 0;
    long long places_degree() const { return np_ell / e_total; }
    long long np_ell = 1;
};

/* Models every ramified x-value plus infinity; checks the degree of
 * div(dx) against the Riemann-Hurwitz genus of the derived tower. */
std::vector<PlaceModel> model_places(const CurveSpec& spec);

}  // namespace cycdiff
