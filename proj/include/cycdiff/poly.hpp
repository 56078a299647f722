/* Dense univariate polynomials over F_q, plus partial fraction expansion
 * of rational functions whose denominator splits into known linear factors.
 */

#pragma once

#include "cycdiff/fq.hpp"

#include <map>
#include <vector>

namespace cycdiff {

class FqPoly {
public:
    FqPoly() : field_(nullptr) {}
    explicit FqPoly(const Fq* field) : field_(field) {}
    FqPoly(const Fq* field, std::vector<Fq::Elem> coeffs);

    const Fq* field() const { return field_; }
    /* degree of the zero polynomial is -1 */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Fq::Elem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }
    const std::vector<Fq::Elem>& coeffs() const { return coeffs_; }
    Fq::Elem leading() const;

    static FqPoly zero(const Fq* f) { return FqPoly(f); }
    static FqPoly constant(const Fq* f, Fq::Elem c);
    static FqPoly x_minus(const Fq* f, Fq::Elem gamma);  // x - gamma
    static FqPoly monomial(const Fq* f, int deg, Fq::Elem c);

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly scaled(Fq::Elem c) const;

    /* (quotient, remainder) with o != 0 */
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& o) const;
    FqPoly operator/(const FqPoly& o) const { return divmod(o).first; }
    FqPoly operator%(const FqPoly& o) const { return divmod(o).second; }

    static FqPoly gcd(FqPoly a, FqPoly b);  // monic gcd

    Fq::Elem eval(Fq::Elem x) const;
    FqPoly monic() const;
    FqPoly pow(long long n) const;

    /* multiplicity of the root gamma (0 if not a root) */
    int root_multiplicity(Fq::Elem gamma) const;

    bool operator==(const FqPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    const Fq* field_;
    std::vector<Fq::Elem> coeffs_;  // coeffs_[i] is the x^i coefficient
    void normalize();
};

/* Partial fraction expansion of num/den where den = prod (x-gamma_i)^{m_i}
 * with the gamma_i distinct.  Yields a polynomial part and, per pole,
 * coefficients c_{i,j} of (x-gamma_i)^{-j} for j = 1..m_i.  deg num may be
 * arbitrary; the expansion satisfies
 *   num/den = poly + sum_i sum_j c_{i,j} (x-gamma_i)^{-j}.
 */
struct PartialFractions {
    FqPoly poly_part;
    /* pole value -> coefficients indexed by j-1 (for (x-gamma)^{-j}) */
    std::map<Fq::Elem, std::vector<Fq::Elem>> singular;
};

PartialFractions pf_expand(const FqPoly& num,
                           const std::vector<std::pair<Fq::Elem, int>>& den_factors);

}  // namespace cycdiff
