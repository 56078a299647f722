#include "cycdiff/poly.hpp"

#include <stdexcept>

namespace cycdiff {

FqPoly::FqPoly(const Fq* field, std::vector<Fq::Elem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    normalize();
}

void FqPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Fq::Elem FqPoly::leading() const {
    if (is_zero()) throw std::domain_error("FqPoly: leading coefficient of zero");
    return coeffs_.back();
}

FqPoly FqPoly::constant(const Fq* f, Fq::Elem c) {
    return FqPoly(f, std::vector<Fq::Elem>{c});
}

FqPoly FqPoly::x_minus(const Fq* f, Fq::Elem gamma) {
    return FqPoly(f, {f->neg(gamma), f->one()});
}

FqPoly FqPoly::monomial(const Fq* f, int deg, Fq::Elem c) {
    std::vector<Fq::Elem> v(deg + 1, 0);
    v[deg] = c;
    return FqPoly(f, std::move(v));
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    const Fq* f = field_ ? field_ : o.field_;
    std::vector<Fq::Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return FqPoly(f, std::move(c));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    const Fq* f = field_ ? field_ : o.field_;
    std::vector<Fq::Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return FqPoly(f, std::move(c));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    const Fq* f = field_ ? field_ : o.field_;
    if (is_zero() || o.is_zero()) return FqPoly(f);
    std::vector<Fq::Elem> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = f->add(c[i + j], f->mul(coeffs_[i], o.coeffs_[j]));
    return FqPoly(f, std::move(c));
}

FqPoly FqPoly::scaled(Fq::Elem c) const {
    std::vector<Fq::Elem> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
    return FqPoly(field_, std::move(v));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& o) const {
    if (o.is_zero()) throw std::domain_error("FqPoly: division by zero polynomial");
    const Fq* f = field_ ? field_ : o.field_;
    std::vector<Fq::Elem> rem = coeffs_;
    int drem = degree(), dden = o.degree();
    if (drem < dden) return {FqPoly(f), *this};
    std::vector<Fq::Elem> quot(drem - dden + 1, 0);
    Fq::Elem lead_inv = f->inv(o.leading());
    for (int i = drem; i >= dden; --i) {
        Fq::Elem c = rem[i];
        if (c == 0) continue;
        Fq::Elem qc = f->mul(c, lead_inv);
        quot[i - dden] = qc;
        for (int j = 0; j <= dden; ++j)
            rem[i - dden + j] = f->sub(rem[i - dden + j], f->mul(qc, o.coeffs_[j]));
    }
    return {FqPoly(f, std::move(quot)), FqPoly(f, std::move(rem))};
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
    const Fq* f = a.field_ ? a.field_ : b.field_;
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    (void)f;
    return a.monic();
}

Fq::Elem FqPoly::eval(Fq::Elem x) const {
    Fq::Elem r = 0;
    for (int i = degree(); i >= 0; --i) r = field_->add(field_->mul(r, x), coeffs_[i]);
    return r;
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

FqPoly FqPoly::pow(long long n) const {
    FqPoly r = FqPoly::constant(field_, field_->one());
    FqPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

int FqPoly::root_multiplicity(Fq::Elem gamma) const {
    if (is_zero()) throw std::domain_error("FqPoly: root multiplicity of zero polynomial");
    FqPoly rem = *this;
    FqPoly lin = FqPoly::x_minus(field_, gamma);
    int m = 0;
    while (true) {
        auto [q, r] = rem.divmod(lin);
        if (!r.is_zero()) break;
        rem = q;
        ++m;
        if (rem.is_zero()) break;
    }
    return m;
}

PartialFractions pf_expand(const FqPoly& num,
                           const std::vector<std::pair<Fq::Elem, int>>& den_factors) {
    const Fq* f = num.field();
    PartialFractions out;
    out.poly_part = FqPoly(f);
    FqPoly rem = num;
    FqPoly den = FqPoly::constant(f, f->one());
    for (const auto& [gamma, m] : den_factors)
        den = den * FqPoly::x_minus(f, gamma).pow(m);
    if (den.degree() == 0) {
        out.poly_part = num.scaled(f->inv(den.coeff(0)));
        return out;
    }
    /* polynomial part first */
    auto [quot, prem] = num.divmod(den);
    out.poly_part = quot;
    rem = prem;
    /* successive extraction: at each pole, the coefficient of the deepest
     * remaining power (x-gamma)^{-j} is (rem / (den/(x-gamma)^m)) evaluated
     * at gamma; peel one power and repeat. */
    for (const auto& [gamma, m] : den_factors) {
        FqPoly cofactor = FqPoly::constant(f, f->one());
        for (const auto& [g2, m2] : den_factors)
            if (g2 != gamma) cofactor = cofactor * FqPoly::x_minus(f, g2).pow(m2);
        FqPoly r = rem;
        std::vector<Fq::Elem> coeffs(m, 0);
        FqPoly lin = FqPoly::x_minus(f, gamma);
        /* rem/den = sum_j c_j (x-gamma)^{-j} + (regular at gamma), so
         * rem/cofactor = rem*(x-gamma)^m/den is regular at gamma and its
         * Taylor coefficient in (x-gamma)^i equals c_{m-i}.  Expand the
         * numerator and the cofactor separately, then divide the series. */
        auto taylor = [&](const FqPoly& poly, int terms) {
            std::vector<Fq::Elem> t(terms, 0);
            FqPoly cur = poly;
            for (int i = 0; i < terms; ++i) {
                t[i] = cur.eval(gamma);
                cur = (cur - FqPoly::constant(f, t[i])).divmod(lin).first;
                if (cur.is_zero()) {
                    /* remaining coefficients stay zero */
                    for (int k2 = i + 1; k2 < terms; ++k2) t[k2] = 0;
                    break;
                }
            }
            return t;
        };
        std::vector<Fq::Elem> tn = taylor(r, m);
        std::vector<Fq::Elem> td = taylor(cofactor, m);
        if (td[0] == 0) throw std::logic_error("pf_expand: repeated pole in cofactor");
        /* series division tn/td to m terms */
        std::vector<Fq::Elem> ts(m, 0);
        Fq::Elem d0inv = f->inv(td[0]);
        for (int i = 0; i < m; ++i) {
            Fq::Elem acc = tn[i];
            for (int k2 = 1; k2 <= i; ++k2)
                acc = f->sub(acc, f->mul(td[k2], ts[i - k2]));
            ts[i] = f->mul(acc, d0inv);
        }
        for (int i = 0; i < m; ++i) coeffs[m - 1 - i] = ts[i];  // c_{m-i} at index m-i-1
        out.singular[gamma] = coeffs;
    }
    return out;
}

}  // namespace cycdiff
