#include "cycdiff/fq.hpp"

#include "cycdiff/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycdiff {

namespace {

/* Dense polynomial arithmetic over F_p on plain coefficient vectors,
 * used only to bootstrap the field (modulus search, element products). */

void strip(std::vector<long long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<long long> poly_mul_mod_p(const std::vector<long long>& a,
                                      const std::vector<long long>& b, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    strip(c);
    return c;
}

/* Remainder of a by monic m, coefficients mod p. */
std::vector<long long> poly_rem(std::vector<long long> a,
                                const std::vector<long long>& m, long long p) {
    strip(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        long long lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = mod_ll(a[shift + i] - lead * m[i], p);
        a.pop_back();
        strip(a);
        if (a.size() <= dm && (a.empty() || a.back() != 0)) break;
    }
    strip(a);
    return a;
}

bool is_irreducible_mod_p(const std::vector<long long>& m, long long p) {
    const size_t d = m.size() - 1;
    if (d == 1) return true;
    /* trial division by every monic polynomial of degree 1..d/2 */
    for (size_t dd = 1; 2 * dd <= d; ++dd) {
        long long count = pow_ll(p, static_cast<int>(dd));
        for (long long enc = 0; enc < count; ++enc) {
            std::vector<long long> g(dd + 1, 0);
            long long t = enc;
            for (size_t i = 0; i < dd; ++i) { g[i] = t % p; t /= p; }
            g[dd] = 1;
            if (poly_rem(m, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Fq::Fq(long long p, int e) : p_(p), e_(e) {
    if (!is_prime_ll(p)) throw std::invalid_argument("Fq: p must be prime");
    if (e < 1) throw std::invalid_argument("Fq: extension degree must be >= 1");
    q_ = pow_ll(p, e);
    if (e == 1) {
        modulus_ = {0, 1};  // T, unused
    } else {
        long long count = pow_ll(p, e);
        for (long long enc = 0; enc < count; ++enc) {
            std::vector<long long> m(e + 1, 0);
            long long t = enc;
            for (int i = 0; i < e; ++i) { m[i] = t % p; t /= p; }
            m[e] = 1;
            if (is_irreducible_mod_p(m, p)) { modulus_ = m; break; }
        }
        if (modulus_.empty()) throw std::logic_error("Fq: no irreducible polynomial found");
    }
    build_tables();
}

Fq::Fq(long long p, int e, std::vector<long long> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime_ll(p)) throw std::invalid_argument("Fq: p must be prime");
    if (e < 1) throw std::invalid_argument("Fq: extension degree must be >= 1");
    q_ = pow_ll(p, e);
    if (e > 1) {
        if (modulus_.size() != static_cast<size_t>(e) + 1 || modulus_.back() != 1)
            throw std::invalid_argument("Fq: modulus must be monic of degree e");
        for (auto& c : modulus_) c = mod_ll(c, p);
        modulus_.back() = 1;
        if (!is_irreducible_mod_p(modulus_, p))
            throw std::invalid_argument("Fq: modulus is reducible");
    }
    build_tables();
}

std::vector<long long> Fq::to_vector(Elem a) const {
    std::vector<long long> v(e_);
    for (int i = 0; i < e_; ++i) { v[i] = a % p_; a /= p_; }
    return v;
}

Fq::Elem Fq::from_vector(const std::vector<long long>& v) const {
    Elem a = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
        long long c = i < static_cast<int>(v.size()) ? mod_ll(v[i], p_) : 0;
        a += c * w;
        w *= p_;
    }
    return a;
}

Fq::Elem Fq::from_int(long long c) const { return mod_ll(c, p_); }

Fq::Elem Fq::add(Elem a, Elem b) const {
    if (e_ == 1) return (a + b) % p_;
    Elem r = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * w;
        a /= p_; b /= p_; w *= p_;
    }
    return r;
}

Fq::Elem Fq::neg(Elem a) const {
    if (e_ == 1) return (p_ - a) % p_;
    Elem r = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
        r += (p_ - a % p_) % p_ * w;
        a /= p_; w *= p_;
    }
    return r;
}

Fq::Elem Fq::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Fq::Elem Fq::mul_raw(Elem a, Elem b) const {
    if (e_ == 1) return (a * b) % p_;
    auto prod = poly_mul_mod_p(to_vector(a), to_vector(b), p_);
    prod = poly_rem(prod, modulus_, p_);
    return from_vector(prod);
}

Fq::Elem Fq::inv_raw(Elem a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    /* a^(q-2); q is small */
    Elem r = 1, base = a;
    long long n = q_ - 2;
    while (n > 0) {
        if (n & 1) r = mul_raw(r, base);
        base = mul_raw(base, base);
        n >>= 1;
    }
    return r;
}

void Fq::build_tables() {
    if (q_ > kTableLimit) return;
    mul_table_.assign(q_ * q_, 0);
    inv_table_.assign(q_, 0);
    for (long long a = 0; a < q_; ++a)
        for (long long b = a; b < q_; ++b) {
            int32_t v = static_cast<int32_t>(mul_raw(a, b));
            mul_table_[a * q_ + b] = v;
            mul_table_[b * q_ + a] = v;
        }
    for (long long a = 1; a < q_; ++a)
        inv_table_[a] = static_cast<int32_t>(inv_raw(a));
}

Fq::Elem Fq::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_raw(a, b);
}

Fq::Elem Fq::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return inv_raw(a);
}

Fq::Elem Fq::pow(Elem a, long long n) const {
    if (n < 0) { a = inv(a); n = -n; }
    Elem r = 1;
    while (n > 0) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

long long Fq::mult_order(Elem a) const {
    if (a == 0) throw std::domain_error("Fq: order of zero");
    long long ord = 1;
    Elem x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
        if (ord > q_) throw std::logic_error("Fq: order computation ran away");
    }
    return ord;
}

Fq::Elem Fq::zeta(long long n) const {
    if (n < 1 || (q_ - 1) % n != 0)
        throw std::invalid_argument("Fq: zeta(n) needs n | q-1");
    if (n == 1) return 1;
    for (Elem a = 1; a < q_; ++a)
        if (mult_order(a) == n) return a;
    throw std::logic_error("Fq: no element of the requested order");
}

std::string Fq::to_string(Elem a) const {
    std::ostringstream os;
    os << a;
    return os.str();
}

long long smallest_field_size(long long p, long long n, long long lower_bound, int* e_out) {
    long long q = p;
    int e = 1;
    while (q <= lower_bound || (q - 1) % n != 0) {
        q *= p;
        ++e;
        if (e > 20) throw std::overflow_error("smallest_field_size: no small field found");
    }
    if (e_out) *e_out = e;
    return q;
}

}  // namespace cycdiff
